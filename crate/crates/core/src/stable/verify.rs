//! Window checks of the stable identities for `GPˢᵖ`.

use serde_json::{json, Value};

use super::limits::gp_sp;
use super::tableaux::gp_partition;
use super::Window;
use crate::coxeter::{is_fpf_grassmannian, FpfInvolution, ShiftedFpfInvolution, StrictPartition};
use crate::error::{precondition, Result};
use crate::grothendieck::{ordered_subsets, SpGrothExpansion};
use crate::poly::{BetaInt, MultiPoly};

/// `GPˢᵖ` of an involution of `ℤ`, via a positive representative of its
/// shift class.
pub fn gp_sp_shifted(z: &ShiftedFpfInvolution, win: &Window) -> Result<MultiPoly> {
    gp_sp(z.base(), win)
}

fn gp_sum(terms: &SpGrothExpansion, win: &Window) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero(win.nvars());
    for (y, c) in terms.terms() {
        acc = &acc + &gp_sp(y, win)?.scalar_mul(c);
    }
    Ok(acc)
}

/// `GPˢᵖ_z = GP_{λˢᵖ(z)}` at the window for FPF-Grassmannian `z`.
pub fn verify_f_grass(z: &FpfInvolution, win: &Window) -> Result<bool> {
    if is_fpf_grassmannian(z).is_none() {
        return Err(precondition(format!("{z} is not FPF-Grassmannian")));
    }
    let shape = StrictPartition::try_from(z.shape())?;
    Ok(gp_sp(z, win)? == gp_partition(&shape, win))
}

/// `Σ_{S ⊆ I} β^{|S|} GPˢᵖ_{v u_S}` against `Σ_{T ⊆ L} β^{|T|} GPˢᵖ_{v u_T}` at a
/// window, for `v(j) = k`, `j < k` in `ℤ`. Terms are keyed by positive
/// representatives.
#[derive(Clone, Debug)]
pub struct StableSpTransition {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
    pub lhs_terms: SpGrothExpansion,
    pub rhs_terms: SpGrothExpansion,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub equal: bool,
}

impl StableSpTransition {
    pub fn to_json(&self) -> Value {
        json!({
            "lower": self.lower,
            "upper": self.upper,
            "lhs_terms": self.lhs_terms.to_json(),
            "rhs_terms": self.rhs_terms.to_json(),
            "equal": self.equal,
        })
    }
}

fn weighted(items: Vec<(usize, ShiftedFpfInvolution)>, shift: usize) -> SpGrothExpansion {
    let beta = BetaInt::beta();
    let mut out = SpGrothExpansion::new();
    for (s, y) in items {
        if s >= shift {
            out.add_term(y.base().clone(), &beta.pow(s - shift));
        }
    }
    out
}

pub fn verify_stable_sp_transition(
    v: &ShiftedFpfInvolution,
    j: i64,
    k: i64,
    win: &Window,
) -> Result<StableSpTransition> {
    let (lower, upper) = v.transition_indices(j, k)?;
    let lhs_terms = weighted(ordered_subsets(v, &lower, |y, i| y.conjugate(i, j)), 0);
    let rhs_terms = weighted(ordered_subsets(v, &upper, |y, l| y.conjugate(k, l)), 0);
    let lhs = gp_sum(&lhs_terms, win)?;
    let rhs = gp_sum(&rhs_terms, win)?;
    let equal = lhs == rhs;
    Ok(StableSpTransition { lower, upper, lhs_terms, rhs_terms, lhs, rhs, equal })
}

/// `GPˢᵖ_z = Σ_{∅ ≠ A ⊆ I} β^{|A|-1} GPˢᵖ_{v u_{A,j}}` at a window.
#[derive(Clone, Debug)]
pub struct PositiveRecurrence {
    pub k: i64,
    pub l: i64,
    pub j: i64,
    pub v: ShiftedFpfInvolution,
    pub lower: Vec<i64>,
    pub terms: SpGrothExpansion,
    pub holds: bool,
}

impl PositiveRecurrence {
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "l": self.l,
            "j": self.j,
            "v": self.v.to_string(),
            "lower": self.lower,
            "terms": self.terms.to_json(),
            "holds": self.holds,
        })
    }
}

pub fn gp_sp_positive_recurrence(z: &ShiftedFpfInvolution, win: &Window) -> Result<PositiveRecurrence> {
    let k = *z
        .visible_descents()
        .last()
        .ok_or_else(|| precondition(format!("{z} has no visible descent")))?;
    let bound = k.min(z.apply(k));
    let hi = z.base().support() as i64 - z.offset() as i64;
    let l = (k + 1..=hi.max(k + 1))
        .rev()
        .find(|&l| z.apply(l) < bound)
        .ok_or_else(|| precondition(format!("no l > {k} with z(l) < {bound} in {z}")))?;
    let v = z.conjugate(k, l);
    let j = v.apply(k);
    let (lower, _) = v.transition_indices(j, k)?;
    let terms = weighted(ordered_subsets(&v, &lower, |y, i| y.conjugate(i, j)), 1);
    let holds = gp_sum(&terms, win)? == gp_sp_shifted(z, win)?;
    Ok(PositiveRecurrence { k, l, j, v, lower, terms, holds })
}
