//! Stable Grothendieck polynomials, `K`-theoretic Schur `P`-functions and
//! their symplectic counterparts, probed at finite windows.

mod basis;
mod limits;
mod tableaux;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::poly::MultiPoly;

pub use basis::{expand_in_g_basis, expand_in_gp_basis, GLambdaExpansion, GPLambdaExpansion, StableExpansion};
pub use limits::{
    g_via_pi_formula, gp_sp, gp_sp_pi_route, gp_via_pi_formula, sp_grassmannian_formula,
    stable_groth_perm,
};
pub use tableaux::{
    gp_partition, shifted_set_valued_sum, stable_groth_partition, MarkedLetter, SetValuedTableau,
    ShiftedSetValuedTableau,
};
pub use verify::{
    gp_sp_positive_recurrence, gp_sp_shifted, verify_f_grass, verify_stable_sp_transition,
    PositiveRecurrence, StableSpTransition,
};

/// Variables `x_1..x_nvars`, terms of total degree at most `maxdeg`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Window {
    nvars: usize,
    maxdeg: usize,
}

impl Window {
    pub fn new(nvars: usize, maxdeg: usize) -> Result<Self> {
        if nvars == 0 || maxdeg == 0 {
            return Err(precondition("window needs nvars ≥ 1 and maxdeg ≥ 1"));
        }
        Ok(Window { nvars, maxdeg })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    /// Sets `x_j = 0` for `j > nvars` and drops terms above `maxdeg`.
    pub fn restrict(&self, f: &MultiPoly) -> MultiPoly {
        f.truncated(self.maxdeg as i64).restricted(self.nvars)
    }
}
