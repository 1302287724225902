//! Sparse Laurent polynomials in `x_1, ..., x_n` over `Z[β]`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::BetaInt;
use crate::error::{precondition, Result};

/// Exponent vector `x_1^{a_1} x_2^{a_2} ...`, without trailing zeros.
/// Exponents may be negative.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn new(mut exps: Vec<i32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The single variable `x_i` raised to `e`.
    pub fn var(i: usize, e: i32) -> Self {
        let mut exps = vec![0; i];
        exps[i - 1] = e;
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn exp(&self, i: usize) -> i32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Index of the last variable with a nonzero exponent.
    pub fn last_var(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.0.clone();
        for (a, b) in exps.iter_mut().zip(&short.0) {
            *a += b;
        }
        Monomial::new(exps)
    }

    /// Replaces the exponents of `x_i` and `x_{i+1}`.
    pub(crate) fn with_pair(&self, i: usize, a: i32, b: i32) -> Monomial {
        let mut exps = self.0.clone();
        if exps.len() < i + 1 {
            exps.resize(i + 1, 0);
        }
        exps[i - 1] = a;
        exps[i] = b;
        Monomial::new(exps)
    }

    /// Exponents padded or cut to length `n`.
    pub fn padded(&self, n: usize) -> Vec<i32> {
        (1..=n).map(|i| self.exp(i)).collect()
    }
}

impl Ord for Monomial {
    /// Graded order: lower total degree first; within a degree, larger
    /// exponent of `x_1` first, then of `x_2`, and so on.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 1..=n {
                match other.exp(i).cmp(&self.exp(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.0)
    }
}

/// A Laurent polynomial in `x_1..x_nvars` with `Z[β]` coefficients.
///
/// `nvars` is the ambient variable count; binary operations work in the
/// larger of the two. Equality compares terms only.
#[derive(Clone, Default)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BetaInt>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BetaInt::one())
    }

    pub fn constant(nvars: usize, c: BetaInt) -> Self {
        Self::term(nvars, Monomial::one(), c)
    }

    pub fn term(nvars: usize, m: Monomial, c: BetaInt) -> Self {
        let mut p = Self::zero(nvars.max(m.last_var()));
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(nvars, Monomial::var(i, 1), BetaInt::one())
    }

    /// `1 + β x_i`.
    pub fn one_plus_beta_x(nvars: usize, i: usize) -> Self {
        let mut p = Self::one(nvars);
        p.add_term(Monomial::var(i, 1), &BetaInt::beta());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BetaInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Same polynomial, declared in at least `n` variables.
    pub fn with_nvars(mut self, n: usize) -> Self {
        self.nvars = self.nvars.max(n);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BetaInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BetaInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BetaInt {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: &BetaInt) {
        if c.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(m.last_var());
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Highest variable index actually occurring.
    pub fn last_var(&self) -> usize {
        self.terms.keys().map(Monomial::last_var).max().unwrap_or(0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    /// Smallest total x-degree of a term.
    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Terms of total x-degree exactly `d`.
    pub fn homogeneous_part(&self, d: i64) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scalar_mul(&self, c: &BetaInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn monomial_mul(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars.max(m.last_var()),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `f ⊕ g = f + g + β f g`.
    pub fn oplus(&self, other: &MultiPoly) -> MultiPoly {
        &(self + other) + &(self * other).scalar_mul(&BetaInt::beta())
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&BetaInt) -> BetaInt) -> MultiPoly {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Drops every term whose total x-degree exceeds `max_deg`.
    pub fn truncated(&self, max_deg: i64) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets `x_{n+1} = x_{n+2} = ... = 0`. Requires nonnegative exponents in
    /// the variables being killed.
    pub fn restricted(&self, n: usize) -> MultiPoly {
        MultiPoly {
            nvars: n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| {
                    debug_assert!(m.exps().iter().skip(n).all(|&e| e >= 0));
                    m.last_var() <= n
                })
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Canonical text form: `coef * x1^a1 ... xk^ak` joined by ` + `, with
    /// the coefficient in dense bracket form.
    pub fn canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut s = c.bracket();
                let vars: Vec<String> = m
                    .exps()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, e)
                        }
                    })
                    .collect();
                if !vars.is_empty() {
                    s.push_str(" * ");
                    s.push_str(&vars.join(" "));
                }
                s
            })
            .collect();
        parts.join(" + ")
    }

    /// JSON form: list of `{"exps": [...], "beta": [...]}` in canonical order,
    /// exponent vectors padded to `nvars`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "exps": m.padded(self.nvars),
                        "beta": c.to_json(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<MultiPoly> {
        let bad = || precondition("malformed polynomial JSON");
        let items = value.as_array().ok_or_else(bad)?;
        let mut p = MultiPoly::zero(0);
        for item in items {
            let exps: Vec<i32> = serde_json::from_value(item["exps"].clone()).map_err(|_| bad())?;
            let n = exps.len();
            let c = BetaInt::from_json(&item["beta"]).ok_or_else(bad)?;
            p.nvars = p.nvars.max(n);
            p.add_term(Monomial::new(exps), &c);
        }
        Ok(p)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in rhs.terms {
            self.add_term(m, &c);
        }
        self
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars.max(rhs.nvars));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self.canonical_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(2, i)
    }

    #[test]
    fn arithmetic() {
        assert!((&x(1) + &-&x(1)).is_zero());
        let lhs = &(&x(1) + &x(2)) * &(&x(1) - &x(2));
        assert_eq!(lhs, &x(1).pow(2) - &x(2).pow(2));
        let a = MultiPoly::one_plus_beta_x(2, 1);
        let b = MultiPoly::one_plus_beta_x(2, 2);
        let expected = MultiPoly::from_terms(
            2,
            [
                (Monomial::one(), BetaInt::one()),
                (Monomial::var(1, 1), BetaInt::beta()),
                (Monomial::var(2, 1), BetaInt::beta()),
                (Monomial::new(vec![1, 1]), BetaInt::monomial(1, 2)),
            ],
        );
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn oplus() {
        let zero = MultiPoly::zero(2);
        assert_eq!(x(1).oplus(&zero), x(1));
        let s = x(1).oplus(&x(2));
        assert_eq!(s.canonical_text(), "[1] * x1 + [1] * x2 + [0,1] * x1 x2");
        let d = x(1).oplus(&x(1));
        assert_eq!(d.canonical_text(), "[2] * x1 + [0,1] * x1^2");
    }

    #[test]
    fn canonical_order() {
        // graded, then lexicographic with x1 largest
        let p = MultiPoly::from_terms(
            3,
            [
                (Monomial::new(vec![1, 0, 1]), BetaInt::one()),
                (Monomial::new(vec![0, 2]), BetaInt::one()),
                (Monomial::new(vec![2]), BetaInt::one()),
                (Monomial::new(vec![1, 1]), BetaInt::from(2)),
            ],
        );
        assert_eq!(
            p.canonical_text(),
            "[1] * x1^2 + [2] * x1 x2 + [1] * x1 x3 + [1] * x2^2"
        );
        assert_eq!(MultiPoly::zero(1).canonical_text(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = &x(1).oplus(&x(2)) * &MultiPoly::term(3, Monomial::new(vec![0, -1, 2]), BetaInt::from(-3));
        let back = MultiPoly::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.nvars(), 3);
    }

    #[test]
    fn truncation_and_restriction() {
        let f = MultiPoly::one(2) + MultiPoly::term(2, Monomial::new(vec![1, 1]), BetaInt::beta());
        assert_eq!(f.truncated(1), MultiPoly::one(2));
        assert_eq!(f.truncated(10), f);
        let g = x(1).oplus(&x(2));
        assert_eq!(g.truncated(1), &x(1) + &x(2));
        assert_eq!(g.restricted(1), x(1));
    }
}
