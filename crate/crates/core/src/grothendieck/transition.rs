//! Transition formulas for `𝔊_w` and `𝔊ˢᵖ_z`, checked by direct polynomial
//! comparison.

use num_traits::One;
use serde_json::{json, Value};

use super::expansion::{GrothExpansion, SpGrothExpansion};
use super::polys::{groth_shared, sp_shared};
use crate::coxeter::{fpf_transition_indices, transition_indices_perm, FpfInvolution, Permutation};
use crate::error::{precondition, Result};
use crate::poly::{BetaInt, MultiPoly};

/// Applies `ops` in order to `start`, once for each subset of `ops`,
/// collecting `(|S|, result)`.
pub(crate) fn ordered_subsets<T: Clone, O: Copy>(
    start: &T,
    ops: &[O],
    apply: impl Fn(&T, O) -> T,
) -> Vec<(usize, T)> {
    let mut out = vec![(0, start.clone())];
    for &op in ops {
        let extended: Vec<_> = out.iter().map(|(s, t)| (s + 1, apply(t, op))).collect();
        out.extend(extended);
    }
    out
}

fn beta_power_sum<K: Ord + Clone + std::fmt::Display>(
    items: Vec<(usize, K)>,
) -> crate::grothendieck::Expansion<K> {
    let beta = BetaInt::beta();
    let mut out = crate::grothendieck::Expansion::new();
    for (s, key) in items {
        out.add_term(key, &beta.pow(s));
    }
    out
}

/// Both sides of the transition formula
/// `(1 + β x_k) Σ_{E ⊆ J} β^{|E|} 𝔊_{v t_E} = Σ_{F ⊆ L} β^{|F|} 𝔊_{v t_F}`, where `t_E`
/// multiplies the transpositions `(e,k)` for `e ∈ E` in increasing order and
/// `t_F` the transpositions `(k,f)` for `f ∈ F` in decreasing order.
#[derive(Clone, Debug)]
pub struct LenartTransition {
    pub v: Permutation,
    pub k: usize,
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
    pub lhs_terms: GrothExpansion,
    pub rhs_terms: GrothExpansion,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub equal: bool,
    /// `(1 + β x_k) 𝔊_v` expanded over chains
    /// `v (a_1,k) ... (a_p,k) (k,b_1) ... (k,b_q)` of Bruhat covers with
    /// `a_p < ... < a_1 < k < b_q < ... < b_1`, weighted `(-1)^p β^{p+q}`.
    pub signed_terms: GrothExpansion,
    pub signed_equal: bool,
}

impl LenartTransition {
    pub fn to_json(&self) -> Value {
        json!({
            "v": self.v.to_string(),
            "k": self.k,
            "lower": self.lower,
            "upper": self.upper,
            "lhs_terms": self.lhs_terms.to_json(),
            "rhs_terms": self.rhs_terms.to_json(),
            "equal": self.equal,
            "signed_terms": self.signed_terms.to_json(),
            "signed_equal": self.signed_equal,
        })
    }
}

fn signed_chains(u: &Permutation, k: usize, bound: usize, below: bool, p: usize, q: usize, out: &mut GrothExpansion) {
    let sign = if p.is_multiple_of(2) { BetaInt::one() } else { -BetaInt::one() };
    out.add_term(u.clone(), &(sign * BetaInt::beta().pow(p + q)));
    if below {
        for a in (1..bound).rev() {
            if u.covered_by_transposition(a, k) {
                signed_chains(&u.swap_positions(a, k), k, a, true, p + 1, q, out);
            }
        }
    }
    let top = if below { u.support().max(k) + 1 } else { bound - 1 };
    for b in (k + 1..=top).rev() {
        if u.covered_by_transposition(k, b) {
            signed_chains(&u.swap_positions(k, b), k, b, false, p, q + 1, out);
        }
    }
}

/// Checks the transition formula for `𝔊_v` at position `k`.
pub fn verify_lenart_transition(v: &Permutation, k: usize) -> Result<LenartTransition> {
    if k == 0 {
        return Err(precondition("transition position must be positive"));
    }
    let (lower, upper) = transition_indices_perm(v, k);
    let lhs_terms = beta_power_sum(ordered_subsets(v, &lower, |u, e| u.swap_positions(e, k)));
    let rhs_terms = beta_power_sum(ordered_subsets(v, &upper, |u, f| u.swap_positions(k, f)));
    let n = v.support().max(k) + 1;
    let factor = MultiPoly::one_plus_beta_x(n, k);
    let lhs = &factor * &lhs_terms.to_polynomial(n);
    let rhs = rhs_terms.to_polynomial(n);
    let equal = lhs == rhs;

    let mut signed_terms = GrothExpansion::new();
    signed_chains(v, k, k, true, 0, 0, &mut signed_terms);
    let signed_equal = &factor * groth_shared(v).as_ref() == signed_terms.to_polynomial(n);
    Ok(LenartTransition {
        v: v.clone(),
        k,
        lower,
        upper,
        lhs_terms,
        rhs_terms,
        lhs,
        rhs,
        equal,
        signed_terms,
        signed_equal,
    })
}

/// Both sides of the symplectic transition formula
/// `(1+βx_j)(1+βx_k) Σ_{S ⊆ I} β^{|S|} 𝔊ˢᵖ_{v u_S} = Σ_{T ⊆ L} β^{|T|} 𝔊ˢᵖ_{v u_T}`
/// for `v(j) = k`, `j < k`, where `u_S` conjugates by `(i,j)` for `i ∈ S` in
/// increasing order and `u_T` by `(k,l)` for `l ∈ T` in decreasing order.
#[derive(Clone, Debug)]
pub struct SpTransition {
    pub v: FpfInvolution,
    pub j: usize,
    pub k: usize,
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
    pub lhs_terms: SpGrothExpansion,
    pub rhs_terms: SpGrothExpansion,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub equal: bool,
}

impl SpTransition {
    pub fn to_json(&self) -> Value {
        json!({
            "v": self.v.to_string(),
            "j": self.j,
            "k": self.k,
            "lower": self.lower,
            "upper": self.upper,
            "lhs_terms": self.lhs_terms.to_json(),
            "rhs_terms": self.rhs_terms.to_json(),
            "equal": self.equal,
        })
    }
}

pub fn verify_sp_transition(v: &FpfInvolution, j: usize, k: usize) -> Result<SpTransition> {
    let (lower, upper) = fpf_transition_indices(v, j, k)?;
    let lhs_terms = beta_power_sum(ordered_subsets(v, &lower, |y, i| y.conjugate(i, j)));
    let rhs_terms = beta_power_sum(ordered_subsets(v, &upper, |y, l| y.conjugate(k, l)));
    let n = v.support().max(k) + 2;
    let factor = &MultiPoly::one_plus_beta_x(n, j) * &MultiPoly::one_plus_beta_x(n, k);
    let lhs = &factor * &lhs_terms.to_polynomial(n);
    let rhs = rhs_terms.to_polynomial(n);
    let equal = lhs == rhs;
    Ok(SpTransition { v: v.clone(), j, k, lower, upper, lhs_terms, rhs_terms, lhs, rhs, equal })
}

/// The recurrence `β 𝔊ˢᵖ_z = (1+βx_j)(1+βx_k) Σ_{S ⊆ I} β^{|S|} 𝔊ˢᵖ_{v u_S} - 𝔊ˢᵖ_v`,
/// where `k` is the last visible descent of `z`, `l > k` is largest with
/// `z(l) < min(k, z(k))`, `v = (k,l) z (k,l)` and `j = v(k)`.
#[derive(Clone, Debug)]
pub struct SpRecurrence {
    pub z: FpfInvolution,
    pub v: FpfInvolution,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
    pub terms: SpGrothExpansion,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    /// The identity holds and the upper index list of `v` is exactly `[l]`.
    pub certified: bool,
}

impl SpRecurrence {
    pub fn to_json(&self) -> Value {
        json!({
            "z": self.z.to_string(),
            "v": self.v.to_string(),
            "j": self.j,
            "k": self.k,
            "l": self.l,
            "lower": self.lower,
            "upper": self.upper,
            "terms": self.terms.to_json(),
            "certified": self.certified,
        })
    }
}

pub fn sp_transition_recurrence(z: &FpfInvolution) -> Result<SpRecurrence> {
    let k = z
        .last_visible_descent()
        .ok_or_else(|| precondition(format!("{z} has no visible descent")))?;
    let bound = k.min(z.apply(k));
    let l = (k + 1..=z.support())
        .rev()
        .find(|&l| z.apply(l) < bound)
        .ok_or_else(|| precondition(format!("no l > {k} with z(l) < {bound} in {z}")))?;
    let v = z.conjugate(k, l);
    let j = v.apply(k);
    let (lower, upper) = fpf_transition_indices(&v, j, k)?;
    let terms = beta_power_sum(ordered_subsets(&v, &lower, |y, i| y.conjugate(i, j)));
    let n = z.support().max(l) + 2;
    let factor = &MultiPoly::one_plus_beta_x(n, j) * &MultiPoly::one_plus_beta_x(n, k);
    let rhs = &(&factor * &terms.to_polynomial(n)) - sp_shared(&v).as_ref();
    let lhs = sp_shared(z).scalar_mul(&BetaInt::beta());
    let certified = lhs == rhs && upper == [l];
    Ok(SpRecurrence { z: z.clone(), v, j, k, l, lower, upper, terms, lhs, rhs, certified })
}
