//! Grothendieck polynomials of permutations and symplectic Grothendieck
//! polynomials of fixed-point-free involutions.

mod expansion;
mod polys;
mod transition;

pub use expansion::{
    expand_in_grothendieck_basis, expand_in_grothendieck_basis_truncated, Expansion,
    GrothExpansion, SpGrothExpansion,
};
pub use polys::{
    beta_rescale_check, grothendieck, grothendieck_at_beta, grothendieck_via_word,
    is_sp_dominant, schubert, sp_dominant_poly, sp_grothendieck, sp_grothendieck_along,
    sp_grothendieck_via_chain, sp_top_poly, staircase_monomial,
};
pub use transition::{
    sp_transition_recurrence, verify_lenart_transition, verify_sp_transition, LenartTransition,
    SpRecurrence, SpTransition,
};
pub(crate) use transition::ordered_subsets;
