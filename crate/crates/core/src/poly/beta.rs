//! The coefficient ring `Z[β]`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A polynomial in `β` with arbitrary-precision integer coefficients,
/// stored densely from `β^0` upward with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BetaInt {
    coeffs: Vec<BigInt>,
}

impl BetaInt {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut b = BetaInt { coeffs };
        b.normalize();
        b
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c β^d`.
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.push(c.into());
        Self::from_coeffs(coeffs)
    }

    /// The indeterminate `β`.
    pub fn beta() -> Self {
        Self::monomial(1, 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `β^d`.
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// Degree in `β`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Every coefficient is a nonnegative integer, i.e. the element lies in `N[β]`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `β ↦ value`.
    pub fn substitute(&self, value: &BetaInt) -> BetaInt {
        // Horner
        let mut acc = BetaInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * value) + &BetaInt::constant(c.clone());
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> BetaInt {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `β^d`.
    pub fn shift(&self, d: usize) -> BetaInt {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        BetaInt { coeffs }
    }

    /// Dense list form, e.g. `[1,2]` for `1 + 2β`; zero is `[0]`.
    pub fn bracket(&self) -> String {
        if self.coeffs.is_empty() {
            return "[0]".to_string();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Coefficients as JSON numbers where they fit in `i64`, decimal strings otherwise.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                })
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Option<Self> {
        let items = value.as_array()?;
        let coeffs = items
            .iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
                serde_json::Value::String(s) => s.parse().ok(),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_coeffs(coeffs))
    }
}

impl Zero for BetaInt {
    fn zero() -> Self {
        BetaInt { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for BetaInt {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl From<i64> for BetaInt {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a BetaInt> for &'a BetaInt {
    type Output = BetaInt;

    fn add(self, rhs: &BetaInt) -> BetaInt {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BetaInt {
    type Output = BetaInt;

    fn add(mut self, rhs: BetaInt) -> BetaInt {
        self += &rhs;
        self
    }
}

impl AddAssign<&BetaInt> for BetaInt {
    fn add_assign(&mut self, rhs: &BetaInt) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&BetaInt> for BetaInt {
    fn sub_assign(&mut self, rhs: &BetaInt) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl<'a> Sub<&'a BetaInt> for &'a BetaInt {
    type Output = BetaInt;

    fn sub(self, rhs: &BetaInt) -> BetaInt {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BetaInt {
    type Output = BetaInt;

    fn sub(mut self, rhs: BetaInt) -> BetaInt {
        self -= &rhs;
        self
    }
}

impl Neg for &BetaInt {
    type Output = BetaInt;

    fn neg(self) -> BetaInt {
        BetaInt {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for BetaInt {
    type Output = BetaInt;

    fn neg(self) -> BetaInt {
        -&self
    }
}

impl<'a> Mul<&'a BetaInt> for &'a BetaInt {
    type Output = BetaInt;

    fn mul(self, rhs: &BetaInt) -> BetaInt {
        if self.is_zero() || rhs.is_zero() {
            return BetaInt::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BetaInt::from_coeffs(coeffs)
    }
}

impl Mul for BetaInt {
    type Output = BetaInt;

    fn mul(self, rhs: BetaInt) -> BetaInt {
        &self * &rhs
    }
}

impl fmt::Display for BetaInt {
    /// Human-readable form such as `2 + 3β - β^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if d == 1 {
                        write!(f, "β")?;
                    } else {
                        write!(f, "β^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BetaInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bracket())
    }
}
