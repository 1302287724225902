//! The `s_i` action, divided differences and isobaric operators.

use num_traits::{One, Zero};

use super::{BetaInt, Monomial, MultiPoly};
use crate::error::{precondition, Result};

/// Which family of operators a word is fed to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    /// The plain divided difference `∂_i`.
    Plain,
    /// `∂_i^(β) f = ∂_i((1 + β x_{i+1}) f)`.
    Beta,
    /// `π_i^(β) f = ∂_i^(β)(x_i f)`.
    Isobaric,
}

impl MultiPoly {
    /// Swaps `x_i` and `x_{i+1}`.
    pub fn act_si(&self, i: usize) -> MultiPoly {
        MultiPoly::from_terms(
            self.nvars().max(i + 1),
            self.terms()
                .map(|(m, c)| (m.with_pair(i, m.exp(i + 1), m.exp(i)), c.clone())),
        )
    }

    /// `(f - s_i f) / (x_i - x_{i+1})`, computed monomial by monomial.
    pub fn divided_diff(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars().max(i + 1));
        for (m, c) in self.terms() {
            let (a, b) = (m.exp(i), m.exp(i + 1));
            if a == b {
                continue;
            }
            // x_i^a x_{i+1}^b = (x_i x_{i+1})^lo * x^{hi-lo} in one slot
            let (lo, gap, sign) = if a > b { (b, a - b, c.clone()) } else { (a, b - a, -c) };
            for t in 0..gap {
                out.add_term(m.with_pair(i, lo + t, lo + gap - 1 - t), &sign);
            }
        }
        out
    }

    pub fn beta_divided_diff(&self, i: usize) -> MultiPoly {
        (&MultiPoly::one_plus_beta_x(self.nvars(), i + 1) * self).divided_diff(i)
    }

    pub fn isobaric(&self, i: usize) -> MultiPoly {
        self.monomial_mul(&Monomial::var(i, 1)).beta_divided_diff(i)
    }

    pub fn apply_op(&self, kind: OperatorKind, i: usize) -> MultiPoly {
        match kind {
            OperatorKind::Plain => self.divided_diff(i),
            OperatorKind::Beta => self.beta_divided_diff(i),
            OperatorKind::Isobaric => self.isobaric(i),
        }
    }

    /// `D_{i_1} D_{i_2} ... D_{i_l} f`: the last letter acts first.
    pub fn apply_word(&self, kind: OperatorKind, word: &[usize]) -> MultiPoly {
        word.iter()
            .rev()
            .fold(self.clone(), |f, &i| f.apply_op(kind, i))
    }

    /// Like [`MultiPoly::apply_word`] but drops terms of degree above `max_deg`
    /// after every step. Exact for the isobaric family, which never lowers
    /// degree.
    pub fn apply_word_truncated(&self, kind: OperatorKind, word: &[usize], max_deg: i64) -> MultiPoly {
        word.iter()
            .rev()
            .fold(self.truncated(max_deg), |f, &i| f.apply_op(kind, i).truncated(max_deg))
    }

    /// Substitutes a value for `β` in every coefficient.
    pub fn set_beta(&self, value: &BetaInt) -> MultiPoly {
        self.map_coeffs(|c| c.substitute(value))
    }

    /// `x_i ↦ s x_i` for every variable, with `s ∈ Z[β]`.
    pub fn scale_variables(&self, s: &BetaInt) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars());
        for (m, c) in self.terms() {
            let d = m.degree();
            assert!(d >= 0, "scale_variables needs nonnegative degree");
            out.add_term(m.clone(), &(c * &s.pow(d as usize)));
        }
        out
    }

    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.act_si(i) == *self
    }

    /// Symmetric in `x_1..x_n`.
    pub fn is_symmetric(&self, n: usize) -> bool {
        (1..n).all(|i| self.is_symmetric_in(i))
    }
}

fn check_index(i: usize, f: &MultiPoly) -> Result<()> {
    if i == 0 || i + 1 > f.nvars() {
        return Err(precondition(format!(
            "operator index {i} does not fit {} variables",
            f.nvars()
        )));
    }
    Ok(())
}

pub fn act_si(i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    check_index(i, f)?;
    Ok(f.act_si(i))
}

pub fn divided_diff(i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    check_index(i, f)?;
    Ok(f.divided_diff(i))
}

pub fn beta_divided_diff(i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    check_index(i, f)?;
    Ok(f.beta_divided_diff(i))
}

pub fn isobaric(i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    check_index(i, f)?;
    Ok(f.isobaric(i))
}

pub fn apply_word(kind: OperatorKind, word: &[usize], f: &MultiPoly) -> Result<MultiPoly> {
    for &i in word {
        check_index(i, f)?;
    }
    Ok(f.apply_word(kind, word))
}

/// Drops monomials of degree above `max_deg`; rejects Laurent input.
pub fn truncate(f: &MultiPoly, max_deg: i64) -> Result<MultiPoly> {
    if !f.is_polynomial() {
        return Err(precondition("truncate needs a polynomial without negative exponents"));
    }
    Ok(f.truncated(max_deg))
}

pub fn set_beta(f: &MultiPoly, value: &BetaInt) -> MultiPoly {
    f.set_beta(value)
}

/// The product `∏ (1 + β x_i)^{e_i}`.
pub fn one_plus_beta_x_product(nvars: usize, factors: &[(usize, usize)]) -> MultiPoly {
    factors.iter().fold(MultiPoly::one(nvars), |acc, &(i, e)| {
        &acc * &MultiPoly::one_plus_beta_x(nvars, i).pow(e)
    })
}

/// Whether a polynomial equals `c` times the constant `1`.
pub(crate) fn is_constant(f: &MultiPoly, c: &BetaInt) -> bool {
    if c.is_zero() {
        return f.is_zero();
    }
    f.len() == 1 && f.constant_term() == *c
}

#[allow(dead_code)]
pub(crate) fn is_one(f: &MultiPoly) -> bool {
    is_constant(f, &BetaInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, exps: &[i32]) -> MultiPoly {
        MultiPoly::term(n, Monomial::new(exps.to_vec()), BetaInt::one())
    }

    fn b() -> BetaInt {
        BetaInt::beta()
    }

    #[test]
    fn swap() {
        assert_eq!(act_si(1, &x(2, &[1])).unwrap(), x(2, &[0, 1]));
        assert_eq!(act_si(1, &x(2, &[1, 1])).unwrap(), x(2, &[1, 1]));
        assert_eq!(act_si(2, &x(3, &[2, 1, 3])).unwrap(), x(3, &[2, 3, 1]));
        assert!(act_si(2, &x(2, &[1])).is_err());
    }

    #[test]
    fn plain_divided_difference() {
        assert_eq!(divided_diff(1, &x(2, &[1])).unwrap(), MultiPoly::one(2));
        assert!(divided_diff(1, &x(2, &[1, 1])).unwrap().is_zero());
        assert_eq!(divided_diff(1, &x(2, &[2])).unwrap(), x(2, &[1]) + x(2, &[0, 1]));
    }

    #[test]
    fn laurent_divided_difference_is_exact() {
        // (x1 - x2) ∂1 f = f - s1 f on a Laurent monomial
        let f = x(3, &[-2, 1, 4]);
        let lhs = &(&x(3, &[1]) - &x(3, &[0, 1])) * &f.divided_diff(1);
        assert_eq!(lhs, &f - &f.act_si(1));
    }

    #[test]
    fn beta_divided_difference() {
        let one = MultiPoly::one(2);
        assert_eq!(beta_divided_diff(1, &one).unwrap(), MultiPoly::constant(2, -b()));
        assert_eq!(beta_divided_diff(1, &x(2, &[1])).unwrap(), one);
        assert_eq!(beta_divided_diff(2, &x(3, &[2, 1])).unwrap(), x(3, &[2]));
    }

    #[test]
    fn isobaric_operator() {
        let one = MultiPoly::one(2);
        assert_eq!(isobaric(1, &one).unwrap(), one);
        let expected = x(2, &[1]) + x(2, &[0, 1]) + MultiPoly::term(2, Monomial::new(vec![1, 1]), b());
        assert_eq!(isobaric(1, &x(2, &[1])).unwrap(), expected);
        let neg = MultiPoly::term(2, Monomial::new(vec![1, 1]), -b());
        assert_eq!(isobaric(1, &x(2, &[0, 1])).unwrap(), neg);
        let sq = x(2, &[2])
            + x(2, &[1, 1])
            + x(2, &[0, 2])
            + MultiPoly::term(2, Monomial::new(vec![2, 1]), b())
            + MultiPoly::term(2, Monomial::new(vec![1, 2]), b());
        assert_eq!(apply_word(OperatorKind::Isobaric, &[1], &x(2, &[2])).unwrap(), sq);
    }

    #[test]
    fn word_application() {
        let f = x(3, &[2, 1]);
        assert_eq!(apply_word(OperatorKind::Isobaric, &[], &f).unwrap(), f);
        assert_eq!(
            apply_word(OperatorKind::Beta, &[1, 2, 1], &f).unwrap(),
            MultiPoly::one(3)
        );
        assert!(apply_word(OperatorKind::Beta, &[3], &f).is_err());
    }

    #[test]
    fn truncation_rejects_laurent() {
        let f = MultiPoly::one(2) + MultiPoly::term(2, Monomial::new(vec![1, 1]), b());
        assert_eq!(truncate(&f, 1).unwrap(), MultiPoly::one(2));
        assert!(truncate(&x(2, &[-1]), 3).is_err());
    }

    #[test]
    fn beta_specialization() {
        let g132 = x(2, &[1]) + x(2, &[0, 1]) + MultiPoly::term(2, Monomial::new(vec![1, 1]), b());
        assert_eq!(set_beta(&g132, &BetaInt::zero()), x(2, &[1]) + x(2, &[0, 1]));
        assert_eq!(set_beta(&g132, &b()), g132);
    }
}
