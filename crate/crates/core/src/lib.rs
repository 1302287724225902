//! Symplectic and ordinary Grothendieck polynomials, their transition
//! formulas, and stable limits.

pub mod coxeter;
pub mod error;
pub mod grothendieck;
pub mod poly;
pub mod stable;

pub use error::{Error, Result};
