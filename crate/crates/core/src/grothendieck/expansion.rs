//! Finite formal sums of basis elements with `Z[β]` coefficients, and the
//! expansion of polynomials in the Grothendieck basis.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use super::polys::{groth_shared, sp_shared};
use crate::coxeter::{FpfInvolution, Permutation};
use crate::error::{precondition, Error, Result};
use crate::poly::{BetaInt, MultiPoly};

/// `Σ c_K K` over basis labels `K`, zero coefficients dropped.
#[derive(Clone, PartialEq, Eq)]
pub struct Expansion<K: Ord> {
    terms: BTreeMap<K, BetaInt>,
}

pub type GrothExpansion = Expansion<Permutation>;
pub type SpGrothExpansion = Expansion<FpfInvolution>;

impl<K: Ord + Clone + fmt::Display> Expansion<K> {
    pub fn new() -> Self {
        Expansion { terms: BTreeMap::new() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, BetaInt)>) -> Self {
        let mut out = Self::new();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, c: &BetaInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(BetaInt::zero);
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &BetaInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &K) -> BetaInt {
        self.terms.get(key).cloned().unwrap_or_else(BetaInt::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every coefficient lies in `N[β]`.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(BetaInt::is_nonnegative)
    }

    /// Sorted list of `{element, coef}` objects.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| json!({"element": k.to_string(), "coef": c.to_json()}))
                .collect(),
        )
    }

    /// `Σ c_K · basis(K)`.
    pub fn evaluate(&self, nvars: usize, basis: impl Fn(&K) -> MultiPoly) -> MultiPoly {
        self.terms.iter().fold(MultiPoly::zero(nvars), |acc, (k, c)| {
            &acc + &basis(k).scalar_mul(c)
        })
    }
}

impl<K: Ord + Clone + fmt::Display> Default for Expansion<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + fmt::Display> fmt::Display for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) * [{k}]")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Display> fmt::Debug for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl GrothExpansion {
    /// `Σ c_w 𝔊_w`.
    pub fn to_polynomial(&self, nvars: usize) -> MultiPoly {
        self.evaluate(nvars, |w| groth_shared(w).as_ref().clone())
    }
}

impl SpGrothExpansion {
    /// `Σ c_z 𝔊ˢᵖ_z`.
    pub fn to_polynomial(&self, nvars: usize) -> MultiPoly {
        self.evaluate(nvars, |z| sp_shared(z).as_ref().clone())
    }
}

/// Coefficients `c_w` of a homogeneous `h = Σ_{ℓ(w) = d} c_w 𝔖_w`, read off as
/// `c_w = ∂_w h`. Builds `∂_u h` breadth-first by left extension `u ↦ s_i u`,
/// discarding branches that vanish.
fn schubert_coefficients(h: &MultiPoly, d: usize) -> Vec<(Permutation, BetaInt)> {
    let mut level = BTreeMap::from([(Permutation::identity(), h.clone())]);
    for _ in 0..d {
        let mut next: BTreeMap<Permutation, MultiPoly> = BTreeMap::new();
        for (u, g) in &level {
            for i in 1..=g.last_var() {
                let su = u.swap_values(i, i + 1);
                if su.length() != u.length() + 1 || next.contains_key(&su) {
                    continue;
                }
                let dg = g.divided_diff(i);
                if !dg.is_zero() {
                    next.insert(su, dg);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|(w, g)| (w, g.constant_term()))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Peels off the lowest-degree part of `rem`, expands it in Schubert
/// polynomials and subtracts the matching Grothendieck polynomials, while the
/// lowest degree is at most `max_deg`. With `truncate`, all arithmetic is done
/// modulo degree `max_deg + 1`.
fn peel(f: &MultiPoly, max_deg: i64, truncate: bool) -> Result<(GrothExpansion, MultiPoly)> {
    if !f.is_polynomial() {
        return Err(precondition("Grothendieck expansion needs a polynomial"));
    }
    let cut = |p: MultiPoly| if truncate { p.truncated(max_deg) } else { p };
    let mut rem = cut(f.clone());
    let mut out = GrothExpansion::new();
    while let Some(d) = rem.min_degree() {
        if d > max_deg {
            break;
        }
        let h = rem.homogeneous_part(d);
        let coeffs = schubert_coefficients(&h, d as usize);
        if coeffs.is_empty() {
            return Err(Error::NonzeroRemainder { remainder: Box::new(h) });
        }
        for (w, c) in coeffs {
            let g = cut(groth_shared(&w).as_ref().clone());
            rem = &rem - &g.scalar_mul(&c);
            out.add_term(w, &c);
        }
    }
    Ok((out, rem))
}

/// Expands a polynomial in the Grothendieck basis. Fails with
/// [`Error::ExpansionExceeded`] if terms of degree above `max_deg` would be
/// needed.
pub fn expand_in_grothendieck_basis(f: &MultiPoly, max_deg: i64) -> Result<GrothExpansion> {
    let (out, rem) = peel(f, max_deg, false)?;
    if !rem.is_zero() {
        return Err(Error::ExpansionExceeded { max_deg, residual: Box::new(rem) });
    }
    Ok(out)
}

/// The coefficients of `𝔊_w` with `ℓ(w) ≤ max_deg` in the (possibly infinite)
/// expansion of `f`. These depend only on `f` modulo degree `max_deg + 1`.
pub fn expand_in_grothendieck_basis_truncated(f: &MultiPoly, max_deg: i64) -> Result<GrothExpansion> {
    peel(f, max_deg, true).map(|(out, _)| out)
}
