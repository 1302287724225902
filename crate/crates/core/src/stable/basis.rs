//! Triangular expansion of window-symmetric polynomials into `{G_λ}` and
//! `{GP_λ}`.
//!
//! At a fixed size the shapes are processed in decreasing lexicographic
//! order, a linear extension of dominance order from the top. The lowest
//! homogeneous part of `G_λ` or `GP_λ` is `s_λ` or `P_λ`, which contains
//! `x^μ` only for `μ ⊴ λ` and `x^λ` with coefficient 1, so the coefficient of
//! `x^λ` in the current remainder is the next expansion coefficient.

use std::fmt;

use serde_json::{json, Value};

use super::tableaux::{gp_partition, stable_groth_partition};
use super::Window;
use crate::coxeter::{Partition, StrictPartition};
use crate::error::{precondition, Error, Result};
use crate::grothendieck::Expansion;
use crate::poly::{Monomial, MultiPoly};

/// Coefficients exact at a window, together with the shapes the window cannot
/// see: size at most `maxdeg` but more than `nvars` rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StableExpansion<K: Ord + fmt::Display> {
    pub terms: Expansion<K>,
    pub window: Window,
    pub censored: Vec<K>,
}

pub type GLambdaExpansion = StableExpansion<Partition>;
pub type GPLambdaExpansion = StableExpansion<StrictPartition>;

impl<K: Ord + Clone + fmt::Display> StableExpansion<K> {
    pub fn is_nonnegative(&self) -> bool {
        self.terms.is_nonnegative()
    }

    pub fn to_json(&self) -> Value {
        let mut terms: Vec<Value> = self
            .terms
            .terms()
            .map(|(k, c)| json!({"element": k.to_string(), "coef": c.to_json(), "censored": false}))
            .collect();
        terms.extend(
            self.censored
                .iter()
                .map(|k| json!({"element": k.to_string(), "coef": Value::Null, "censored": true})),
        );
        json!({
            "window": {"nvars": self.window.nvars(), "maxdeg": self.window.maxdeg()},
            "terms": terms,
        })
    }
}

fn pivot(parts: &[usize]) -> Monomial {
    Monomial::new(parts.iter().map(|&p| p as i32).collect())
}

fn check_symmetric(f: &MultiPoly, win: &Window) -> Result<MultiPoly> {
    if !f.is_polynomial() {
        return Err(precondition("expansion input must be a polynomial"));
    }
    let g = win.restrict(f);
    if !g.is_symmetric(win.nvars()) {
        return Err(precondition(format!(
            "input is not symmetric in x1..x{} modulo degree > {}",
            win.nvars(),
            win.maxdeg()
        )));
    }
    Ok(g)
}

fn eliminate<K: Ord + Clone + fmt::Display>(
    f: &MultiPoly,
    win: &Window,
    shapes: impl Fn(usize) -> Vec<K>,
    parts: impl Fn(&K) -> &[usize],
    basis: impl Fn(&K, &Window) -> MultiPoly,
) -> Result<StableExpansion<K>> {
    let mut rem = check_symmetric(f, win)?;
    let mut terms = Expansion::new();
    let mut censored = Vec::new();
    for size in 0..=win.maxdeg() {
        for shape in shapes(size) {
            if parts(&shape).len() > win.nvars() {
                censored.push(shape);
                continue;
            }
            let c = rem.coeff(&pivot(parts(&shape)));
            if num_traits::Zero::is_zero(&c) {
                continue;
            }
            rem = &rem - &basis(&shape, win).scalar_mul(&c);
            terms.add_term(shape, &c);
        }
    }
    if !rem.is_zero() {
        return Err(Error::NonzeroRemainder { remainder: Box::new(rem) });
    }
    Ok(StableExpansion { terms, window: *win, censored })
}

/// `f ≡ Σ c_λ G_λ` at the window.
pub fn expand_in_g_basis(f: &MultiPoly, win: &Window) -> Result<GLambdaExpansion> {
    eliminate(f, win, Partition::all_of_size, Partition::parts, stable_groth_partition)
}

/// `f ≡ Σ c_λ GP_λ` at the window; fails if `f` leaves the span.
pub fn expand_in_gp_basis(f: &MultiPoly, win: &Window) -> Result<GPLambdaExpansion> {
    eliminate(f, win, StrictPartition::all_of_size, StrictPartition::parts, gp_partition)
}
