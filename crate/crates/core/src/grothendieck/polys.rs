//! `𝔊_w`, `𝔖_w` and `𝔊ˢᵖ_z`, computed by divided-difference recursion from
//! the top elements, with process-wide memoization.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::coxeter::{ascent_chain_to_top, FpfInvolution, Permutation};
use crate::error::{precondition, Result};
use crate::poly::{BetaInt, Monomial, MultiPoly, OperatorKind};

type Cache<K> = RwLock<HashMap<K, Arc<MultiPoly>>>;

fn groth_cache() -> &'static Cache<Permutation> {
    static CACHE: OnceLock<Cache<Permutation>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn sp_cache() -> &'static Cache<FpfInvolution> {
    static CACHE: OnceLock<Cache<FpfInvolution>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached<K: Hash + Eq + Clone>(cache: &Cache<K>, key: &K) -> Option<Arc<MultiPoly>> {
    cache.read().expect("cache lock").get(key).cloned()
}

fn store<K: Hash + Eq>(cache: &Cache<K>, key: K, value: Arc<MultiPoly>) {
    cache.write().expect("cache lock").insert(key, value);
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}`, the Grothendieck polynomial of `n ... 321`.
pub fn staircase_monomial(n: usize) -> MultiPoly {
    let exps = (1..n).map(|i| (n - i) as i32).collect();
    MultiPoly::term(n.max(1), Monomial::new(exps), BetaInt::one())
}

/// `∏_{1 ≤ i < j ≤ n-i} (x_i ⊕ x_j)`, the symplectic Grothendieck polynomial of `n ... 321`.
pub fn sp_top_poly(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one(n.max(1));
    for i in 1..n {
        for j in i + 1..=n.saturating_sub(i) {
            acc = &acc * &MultiPoly::var(n, i).oplus(&MultiPoly::var(n, j));
        }
    }
    acc
}

/// Shared handle to `𝔊_w`.
///
/// Walks up from `w` by least ascents `i < n` (right multiplication by
/// `s_i`) until it meets a cached element or `n ... 321`, then comes back
/// down with `𝔊_u = ∂^(β)_i 𝔊_{u s_i}`.
pub(crate) fn groth_shared(w: &Permutation) -> Arc<MultiPoly> {
    let cache = groth_cache();
    let n = w.support();
    let mut chain = Vec::new();
    let mut u = w.clone();
    let mut poly = loop {
        if let Some(p) = cached(cache, &u) {
            break p;
        }
        match (1..n).find(|&i| u.apply(i) < u.apply(i + 1)) {
            Some(i) => {
                let up = u.swap_positions(i, i + 1);
                chain.push((std::mem::replace(&mut u, up), i));
            }
            None => {
                let top = Arc::new(staircase_monomial(n));
                store(cache, u.clone(), top.clone());
                break top;
            }
        }
    };
    for (u, i) in chain.into_iter().rev() {
        poly = Arc::new(poly.beta_divided_diff(i));
        store(cache, u, poly.clone());
    }
    poly
}

/// Shared handle to `𝔊ˢᵖ_z`, by the same least-ascent recursion on
/// conjugation `z ↦ s_i z s_i`.
pub(crate) fn sp_shared(z: &FpfInvolution) -> Arc<MultiPoly> {
    let cache = sp_cache();
    let n = z.support();
    let mut chain = Vec::new();
    let mut y = z.clone();
    let mut poly = loop {
        if let Some(p) = cached(cache, &y) {
            break p;
        }
        match (1..n).find(|&i| y.apply(i) < y.apply(i + 1)) {
            Some(i) => {
                let up = y.conjugate_simple(i);
                chain.push((std::mem::replace(&mut y, up), i));
            }
            None => {
                let top = Arc::new(sp_top_poly(n));
                store(cache, y.clone(), top.clone());
                break top;
            }
        }
    };
    for (y, i) in chain.into_iter().rev() {
        poly = Arc::new(poly.beta_divided_diff(i));
        store(cache, y, poly.clone());
    }
    poly
}

/// The Grothendieck polynomial `𝔊_w`, declared in at least `nvars` variables
/// (default: the support of `w`).
pub fn grothendieck(w: &Permutation, nvars: Option<usize>) -> MultiPoly {
    let n = nvars.unwrap_or(w.support()).max(1);
    groth_shared(w).as_ref().clone().with_nvars(n)
}

/// `𝔊_w = ∂^(β)_{i_1} ... ∂^(β)_{i_l} 𝔊_{w_0}` for the reduced word of `w^{-1} w_0`.
/// Uncached; used to cross-check [`grothendieck`].
pub fn grothendieck_via_word(w: &Permutation) -> MultiPoly {
    let n = w.support();
    let w0 = Permutation::longest(n);
    let word = w.inverse().compose(&w0).reduced_word();
    staircase_monomial(n).apply_word(OperatorKind::Beta, &word)
}

/// `𝔊_w` with `β` specialized to `c`, computed by running the recursion with
/// the operators `f ↦ ∂_i((1 + c x_{i+1}) f)` rather than by substitution.
pub fn grothendieck_at_beta(w: &Permutation, c: &BetaInt) -> MultiPoly {
    let n = w.support();
    let w0 = Permutation::longest(n);
    let word = w.inverse().compose(&w0).reduced_word();
    word.iter().rev().fold(staircase_monomial(n), |f, &i| {
        let factor = &MultiPoly::one(n) + &MultiPoly::var(n, i + 1).scalar_mul(c);
        (&factor * &f).divided_diff(i)
    })
}

/// The Schubert polynomial `𝔖_w`, i.e. `𝔊_w` at `β = 0`.
pub fn schubert(w: &Permutation) -> MultiPoly {
    grothendieck(w, None).set_beta(&BetaInt::zero())
}

/// The symplectic Grothendieck polynomial `𝔊ˢᵖ_z`, declared in at least
/// `nvars` variables (default: the support of `z`).
pub fn sp_grothendieck(z: &FpfInvolution, nvars: Option<usize>) -> MultiPoly {
    let n = nvars.unwrap_or(z.support()).max(1);
    sp_shared(z).as_ref().clone().with_nvars(n)
}

/// `𝔊ˢᵖ_z` along [`ascent_chain_to_top`] inside `I^FPF_n`, starting from the
/// top product. Checks at every step that the conjugation really lowers
/// `ℓ_fpf`, i.e. `i+1 ≠ y(i) > y(i+1) ≠ i`.
pub fn sp_grothendieck_via_chain(z: &FpfInvolution, n: usize) -> Result<MultiPoly> {
    let word = ascent_chain_to_top(z, n)?;
    sp_grothendieck_along(z, n, &word)
}

/// `𝔊ˢᵖ_z` along an arbitrary ascent word `(i_1, ..., i_m)` that carries `z` to
/// `n ... 321`. Errors if some step is not length-increasing or the word does
/// not end at the top.
pub fn sp_grothendieck_along(z: &FpfInvolution, n: usize, word: &[usize]) -> Result<MultiPoly> {
    let mut states = vec![z.clone()];
    for &i in word {
        let y = states.last().expect("nonempty");
        if y.apply(i) >= y.apply(i + 1) {
            return Err(precondition(format!("{i} is not an ascent of {y}")));
        }
        let next = y.conjugate_simple(i);
        states.push(next);
    }
    if states.last() != Some(&FpfInvolution::longest(n)) {
        return Err(precondition(format!("word does not reach the top of I^FPF_{n}")));
    }
    let mut poly = sp_top_poly(n);
    for (step, &i) in word.iter().enumerate().rev() {
        let y = &states[step + 1];
        assert!(
            i + 1 != y.apply(i) && y.apply(i) > y.apply(i + 1) && y.apply(i + 1) != i,
            "descent condition fails for {y} at {i}"
        );
        poly = poly.beta_divided_diff(i);
    }
    Ok(poly)
}

/// `D^Sp(z) = {(i+j, j) : j ∈ [k], 1 ≤ i ≤ μ_j}` for a strict partition `μ`.
pub fn is_sp_dominant(z: &FpfInvolution) -> bool {
    sp_dominant_mu(z).is_some()
}

fn sp_dominant_mu(z: &FpfInvolution) -> Option<Vec<usize>> {
    let cells = z.rothe_diagram();
    let k = cells.iter().map(|&(_, c)| c).max().unwrap_or(0);
    let mut mu = Vec::with_capacity(k);
    for j in 1..=k {
        let mut rows: Vec<usize> = cells.iter().filter(|&&(_, c)| c == j).map(|&(r, _)| r).collect();
        rows.sort_unstable();
        let expected: Vec<usize> = (j + 1..=j + rows.len()).collect();
        if rows.is_empty() || rows != expected {
            return None;
        }
        mu.push(rows.len());
    }
    mu.windows(2).all(|w| w[0] > w[1]).then_some(mu)
}

/// `∏_{(i,j) ∈ D^Sp(z)} (x_i ⊕ x_j)` for Sp-dominant `z`.
pub fn sp_dominant_poly(z: &FpfInvolution) -> Result<MultiPoly> {
    if !is_sp_dominant(z) {
        return Err(precondition(format!("{z} is not Sp-dominant")));
    }
    let n = z.support().max(1);
    Ok(z.rothe_diagram().iter().fold(MultiPoly::one(n), |acc, &(i, j)| {
        &acc * &MultiPoly::var(n, i).oplus(&MultiPoly::var(n, j))
    }))
}

/// `(-β)^{ℓ(w)} 𝔊_w^{(β)} = 𝔊_w^{(-1)}(-βx_1, -βx_2, ...)`.
pub fn beta_rescale_check(w: &Permutation) -> bool {
    let minus_beta = -BetaInt::beta();
    let lhs = grothendieck(w, None).scalar_mul(&minus_beta.pow(w.length()));
    let rhs = grothendieck_at_beta(w, &BetaInt::from(-1)).scale_variables(&minus_beta);
    lhs == rhs
}
