//! Exact Laurent polynomial arithmetic over `Z[β]`.

mod beta;
mod multipoly;
mod operators;

pub use beta::BetaInt;
pub use multipoly::{Monomial, MultiPoly};
pub use operators::{
    act_si, apply_word, beta_divided_diff, divided_diff, isobaric, one_plus_beta_x_product,
    set_beta, truncate, OperatorKind,
};
