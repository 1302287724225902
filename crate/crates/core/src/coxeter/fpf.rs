//! Fixed-point-free involutions of the positive integers (and of the integers).
//!
//! An involution here agrees with `Θ = (1,2)(3,4)(5,6)...` outside a finite
//! window. Most statistics only look inside that window; beyond it every
//! 2-cycle is an adjacent pair `{2i-1, 2i}` and contributes nothing.

use std::fmt;
use std::str::FromStr;

use crate::error::{precondition, Error, Result};

use super::{format_word, parse_word, Partition, StrictPartition};

/// `Θ(i) = i - (-1)^i`, valid on all of `ℤ`.
pub fn theta(i: i64) -> i64 {
    if i.rem_euclid(2) == 0 {
        i - 1
    } else {
        i + 1
    }
}

/// A fixed-point-free involution `z` of `{1, 2, ...}` with `z(i) = Θ(i)` for
/// all large `i`, stored as `z(1) ... z(n)` for the least even `n` past which
/// `z` agrees with `Θ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FpfInvolution {
    oneline: Vec<usize>,
}

impl FpfInvolution {
    /// `Θ` itself.
    pub fn theta() -> Self {
        FpfInvolution { oneline: Vec::new() }
    }

    pub fn from_oneline(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let valid = n.is_multiple_of(2)
            && word.iter().enumerate().all(|(i, &v)| {
                v >= 1 && v <= n && v != i + 1 && word[v - 1] == i + 1
            });
        if !valid {
            return Err(Error::InvalidInvolution(word));
        }
        Ok(Self::trimmed(word))
    }

    fn trimmed(mut word: Vec<usize>) -> Self {
        while word.len() >= 2 {
            let n = word.len();
            if word[n - 2] == n && word[n - 1] == n - 1 {
                word.truncate(n - 2);
            } else {
                break;
            }
        }
        FpfInvolution { oneline: word }
    }

    /// Builds the involution with the given 2-cycles (and `Θ` elsewhere).
    pub fn from_cycles(cycles: &[(usize, usize)]) -> Result<Self> {
        let top = cycles.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        let n = top + top % 2;
        let mut word = vec![0usize; n];
        for &(a, b) in cycles {
            if a == 0 || b == 0 || a == b || word[a - 1] != 0 || word[b - 1] != 0 {
                return Err(precondition(format!("bad 2-cycle ({a},{b})")));
            }
            word[a - 1] = b;
            word[b - 1] = a;
        }
        if n > 0 && word[n - 1] == 0 && word[n - 2] == 0 {
            word[n - 1] = n - 1;
            word[n - 2] = n;
        }
        Self::from_oneline(word)
    }

    /// The longest element `n ... 3 2 1` of `I^FPF_n`, `n` even.
    pub fn longest(n: usize) -> Self {
        assert!(n.is_multiple_of(2), "longest fpf involution needs even n");
        Self::trimmed((1..=n).rev().collect())
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// Least even `n` such that `z(i) = Θ(i)` for all `i > n`.
    pub fn support(&self) -> usize {
        self.oneline.len()
    }

    pub fn is_theta(&self) -> bool {
        self.oneline.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.oneline.len() {
            self.oneline[i - 1]
        } else {
            theta(i as i64) as usize
        }
    }

    fn at(&self, i: i64) -> i64 {
        if i >= 1 {
            self.apply(i as usize) as i64
        } else {
            theta(i)
        }
    }

    /// One-line word padded to length `n` (rounded up to the support and to even).
    pub fn word_of_len(&self, n: usize) -> Vec<usize> {
        let n = n.max(self.support());
        let n = n + n % 2;
        (1..=n).map(|i| self.apply(i)).collect()
    }

    /// The 2-cycles `(a, b)`, `a < b`, inside the support.
    pub fn cycles(&self) -> Vec<(usize, usize)> {
        self.oneline
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i + 1 < v)
            .map(|(i, &v)| (i + 1, v))
            .collect()
    }

    /// `t z t` for the transposition `t = (a, b)`.
    pub fn conjugate(&self, a: usize, b: usize) -> Self {
        let t = |i: usize| {
            if i == a {
                b
            } else if i == b {
                a
            } else {
                i
            }
        };
        let n = self.support().max(a).max(b);
        let n = n + n % 2;
        Self::trimmed((1..=n).map(|i| t(self.apply(t(i)))).collect())
    }

    /// `s_i z s_i`.
    pub fn conjugate_simple(&self, i: usize) -> Self {
        self.conjugate(i, i + 1)
    }

    /// `|{(i,j) : z(i) > z(j) < i < j}|`.
    pub fn fpf_length(&self) -> usize {
        self.code().iter().sum()
    }

    /// Symplectic code: `c_i = |{j : z(i) > z(j) < i < j}|` for `i` in the support.
    pub fn code(&self) -> Vec<usize> {
        let n = self.support();
        (1..=n)
            .map(|i| {
                (i + 1..=n)
                    .filter(|&j| self.apply(j) < i && self.apply(i) > self.apply(j))
                    .count()
            })
            .collect()
    }

    /// `D^Sp(z) = {(i, z(j)) : z(i) > z(j) < i < j}`, sorted.
    pub fn rothe_diagram(&self) -> Vec<(usize, usize)> {
        let n = self.support();
        let mut cells = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.apply(j) < i && self.apply(i) > self.apply(j) {
                    cells.push((i, self.apply(j)));
                }
            }
        }
        cells.sort_unstable();
        cells
    }

    /// `λ^Sp(z)`: the transpose of the sorted symplectic code.
    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.code()).transpose()
    }

    /// True iff `y ⋖_F (i,j) y (i,j)` for `y = self`.
    pub fn covered_by_conjugation(&self, i: usize, j: usize) -> Result<bool> {
        if i == j {
            return Err(precondition("fpf cover test needs i != j"));
        }
        let (i, j) = (i.min(j) as i64, i.max(j) as i64);
        Ok(fpf_cover_criterion(|e| self.at(e), i, j))
    }

    /// All `i` with `z(i+1) < min(i, z(i))`, increasing.
    pub fn visible_descents(&self) -> Vec<usize> {
        (1..=self.support())
            .filter(|&i| self.apply(i + 1) < i.min(self.apply(i)))
            .collect()
    }

    pub fn last_visible_descent(&self) -> Option<usize> {
        self.visible_descents().last().copied()
    }

    /// Deletes every arc `{a < b}` whose interior points are all matched to
    /// the right of `b`.
    pub fn dearc(&self) -> PartialMatching {
        let arcs = self
            .cycles()
            .into_iter()
            .filter(|&(a, b)| !(a + 1..b).all(|e| self.apply(e) > b))
            .collect();
        PartialMatching { arcs }
    }

    /// `(21)^m × z`.
    pub fn shift(&self, m: usize) -> Self {
        if self.is_theta() {
            return Self::theta();
        }
        let word = (1..=2 * m)
            .map(|i| theta(i as i64) as usize)
            .chain(self.oneline.iter().map(|&v| v + 2 * m))
            .collect();
        FpfInvolution { oneline: word }
    }

    /// All elements of `I^FPF_n` (perfect matchings of `{1..n}`), `n` even.
    pub fn all(n: usize) -> Vec<Self> {
        assert!(n.is_multiple_of(2));
        let mut out = Vec::new();
        let mut word = vec![0usize; n];
        matchings(&mut word, &mut out);
        out.sort();
        out
    }
}

fn matchings(word: &mut Vec<usize>, out: &mut Vec<FpfInvolution>) {
    let Some(first) = word.iter().position(|&v| v == 0) else {
        out.push(FpfInvolution::trimmed(word.clone()));
        return;
    };
    for partner in first + 1..word.len() {
        if word[partner] == 0 {
            word[first] = partner + 1;
            word[partner] = first + 1;
            matchings(word, out);
            word[first] = 0;
            word[partner] = 0;
        }
    }
}

/// Two-case cover criterion for `y ⋖_F (i,j) y (i,j)`, `i < j`.
fn fpf_cover_criterion(y: impl Fn(i64) -> i64, i: i64, j: i64) -> bool {
    let (yi, yj) = (y(i), y(j));
    let shape_ok = if yi < i {
        (yi < i && j < yj) || (yi < yj && yj < i)
    } else if j < yj {
        (yi < i && j < yj) || (j < yi && yi < yj)
    } else {
        false
    };
    shape_ok && (i + 1..j).all(|e| !(yi < y(e) && y(e) < yj))
}

/// An involution of the positive integers that may have fixed points, given by
/// its nontrivial 2-cycles. Produced by [`FpfInvolution::dearc`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartialMatching {
    pub arcs: Vec<(usize, usize)>,
}

impl PartialMatching {
    pub fn is_identity(&self) -> bool {
        self.arcs.is_empty()
    }
}

impl fmt::Display for PartialMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arcs.is_empty() {
            return write!(f, "1");
        }
        for (a, b) in &self.arcs {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// Witness that `dearc(z) = (φ_1, n+1) ... (φ_r, n+r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpfGrassmannian {
    /// Zero for `Θ` (the case `r = 0`).
    pub n: usize,
    pub phi: Vec<usize>,
}

impl FpfGrassmannian {
    /// `(n - φ_1, ..., n - φ_r)`.
    pub fn shape(&self) -> StrictPartition {
        StrictPartition::new(self.phi.iter().map(|&p| self.n - p).collect())
            .expect("φ is strictly increasing")
    }
}

pub fn fpf_length(z: &FpfInvolution) -> usize {
    z.fpf_length()
}

pub fn fpf_cover_up(y: &FpfInvolution, i: usize, j: usize) -> Result<bool> {
    y.covered_by_conjugation(i, j)
}

/// For `v(j) = k`, `j < k`: the `i < j` with `v ⋖_F (i,j)v(i,j)` (increasing)
/// and the `l > k` with `v ⋖_F (k,l)v(k,l)` (decreasing).
pub fn fpf_transition_indices(
    v: &FpfInvolution,
    j: usize,
    k: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    if j >= k || v.apply(j) != k {
        return Err(precondition(format!("need v({j}) = {k} with {j} < {k}")));
    }
    let lower = (1..j)
        .filter(|&i| fpf_cover_criterion(|e| v.at(e), i as i64, j as i64))
        .collect();
    // Past support + 2 the involution is a run of Θ pairs, which always
    // contains a blocking point.
    let bound = v.support().max(k) + 2;
    let upper: Vec<usize> = (k + 1..=bound)
        .rev()
        .filter(|&l| fpf_cover_criterion(|e| v.at(e), k as i64, l as i64))
        .collect();
    debug_assert!((bound + 1..bound + 6)
        .all(|l| !fpf_cover_criterion(|e| v.at(e), k as i64, l as i64)));
    Ok((lower, upper))
}

pub fn visible_descents(z: &FpfInvolution) -> Vec<usize> {
    z.visible_descents()
}

pub fn sp_rothe_diagram(z: &FpfInvolution) -> Vec<(usize, usize)> {
    z.rothe_diagram()
}

pub fn sp_code(z: &FpfInvolution) -> Vec<usize> {
    z.code()
}

pub fn sp_shape(z: &FpfInvolution) -> Partition {
    z.shape()
}

pub fn dearc(z: &FpfInvolution) -> PartialMatching {
    z.dearc()
}

/// Returns the witness `(n, φ)` if `z` is FPF-Grassmannian; `Θ` gives `(0, [])`.
pub fn is_fpf_grassmannian(z: &FpfInvolution) -> Option<FpfGrassmannian> {
    let arcs = z.dearc().arcs;
    if arcs.is_empty() {
        return z.is_theta().then(|| FpfGrassmannian { n: 0, phi: Vec::new() });
    }
    // arcs are sorted by left endpoint; the right endpoints must then be n+1, ..., n+r.
    let first_right = arcs[0].1;
    let n = first_right - 1;
    let consecutive = arcs
        .iter()
        .enumerate()
        .all(|(i, &(a, b))| b == first_right + i && a <= n);
    consecutive.then(|| FpfGrassmannian {
        n,
        phi: arcs.iter().map(|&(a, _)| a).collect(),
    })
}

/// The unique FPF-Grassmannian involution with shape `λ` and last visible
/// descent `n`.
///
/// Its `dearc` is `(φ_1,m+1)...(φ_r,m+r)` where `m` is `n` or `n + 1` and
/// `λ` may be padded by one zero part (`φ_r = m`); the remaining positions
/// are paired off consecutively. Every candidate is checked against
/// [`is_fpf_grassmannian`], [`FpfInvolution::shape`] and the visible descents.
pub fn fpf_grassmannian_from_shape(lambda: &StrictPartition, n: usize) -> Result<FpfInvolution> {
    if lambda.is_empty() {
        return Ok(FpfInvolution::theta());
    }
    if lambda.part(1) >= n {
        return Err(precondition(format!("need λ_1 < n, got λ = {lambda}, n = {n}")));
    }
    for m in [n, n + 1] {
        for pad in [0, 1] {
            let mut parts = lambda.parts().to_vec();
            parts.extend(std::iter::repeat_n(0, pad));
            if !(m - parts.len()).is_multiple_of(2) || parts[0] >= m {
                continue;
            }
            let phi: Vec<usize> = parts.iter().map(|&p| m - p).collect();
            let Some(z) = complete_dearc(m, &phi) else {
                continue;
            };
            if z.last_visible_descent() == Some(n) && z.shape() == *lambda.as_partition() {
                return Ok(z);
            }
        }
    }
    Err(precondition(format!(
        "no FPF-Grassmannian involution has shape {lambda} and last visible descent {n}"
    )))
}

/// Places the arcs `(φ_i, m+i)`, pairs the other positions consecutively, and
/// keeps the result only if its `dearc` is exactly those arcs.
fn complete_dearc(m: usize, phi: &[usize]) -> Option<FpfInvolution> {
    let r = phi.len();
    let mut word = vec![0usize; m + r];
    for (i, &p) in phi.iter().enumerate() {
        word[p - 1] = m + i + 1;
        word[m + i] = p;
    }
    let free: Vec<usize> = (1..=m + r).filter(|&i| word[i - 1] == 0).collect();
    for pair in free.chunks(2) {
        word[pair[0] - 1] = pair[1];
        word[pair[1] - 1] = pair[0];
    }
    let z = FpfInvolution::from_oneline(word).ok()?;
    let witness = is_fpf_grassmannian(&z)?;
    (witness.n == m && witness.phi == phi).then_some(z)
}

pub fn shift_fpf(m: usize, z: &FpfInvolution) -> FpfInvolution {
    z.shift(m)
}

/// A word `(i_1, ..., i_m)` such that conjugating `z` successively by
/// `s_{i_1}, s_{i_2}, ...` raises `ℓ_fpf` by one each step and ends at
/// `n ... 321`. Always takes the least ascent.
pub fn ascent_chain_to_top(z: &FpfInvolution, n: usize) -> Result<Vec<usize>> {
    if !n.is_multiple_of(2) || n < z.support() {
        return Err(precondition(format!(
            "chain target n = {n} must be even and at least the support {}",
            z.support()
        )));
    }
    let mut y = z.clone();
    let mut word = Vec::new();
    while let Some(i) = (1..n).find(|&i| y.apply(i) < y.apply(i + 1)) {
        word.push(i);
        y = y.conjugate_simple(i);
    }
    debug_assert_eq!(y, FpfInvolution::longest(n));
    Ok(word)
}

impl fmt::Display for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.oneline.is_empty() {
            return write!(f, "21");
        }
        f.write_str(&format_word(&self.oneline))
    }
}

impl fmt::Debug for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fpf({self})")
    }
}

impl FromStr for FpfInvolution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FpfInvolution::from_oneline(parse_word(s)?)
    }
}

/// A fixed-point-free involution of `ℤ` agreeing with `Θ` outside a finite
/// window: `base` shifted left by the even `offset`, so position `i` of this
/// involution is position `i + offset` of `base`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ShiftedFpfInvolution {
    offset: usize,
    base: FpfInvolution,
}

impl ShiftedFpfInvolution {
    pub fn new(offset: usize, base: FpfInvolution) -> Result<Self> {
        if !offset.is_multiple_of(2) {
            return Err(precondition("shift offset must be even"));
        }
        Ok(Self::canonical(offset, base))
    }

    fn canonical(mut offset: usize, mut base: FpfInvolution) -> Self {
        // strip leading Θ pairs: (21) × z shifted by 2 is z
        while offset >= 2 && base.support() >= 2 && base.apply(1) == 2 {
            base = FpfInvolution::trimmed(base.oneline[2..].iter().map(|&v| v - 2).collect());
            offset -= 2;
        }
        if base.is_theta() {
            offset = 0;
        }
        ShiftedFpfInvolution { offset, base }
    }

    pub fn from_positive(base: FpfInvolution) -> Self {
        Self::canonical(0, base)
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// A representative in `I^FPF_∞`; all involutions in the same shift class
    /// share their stable limit.
    pub fn base(&self) -> &FpfInvolution {
        &self.base
    }

    pub fn apply(&self, i: i64) -> i64 {
        self.base.at(i + self.offset as i64) - self.offset as i64
    }

    /// Smallest and largest positions where this may differ from `Θ`.
    fn window(&self) -> (i64, i64) {
        let off = self.offset as i64;
        (1 - off, self.base.support() as i64 - off)
    }

    fn from_fn(lo: i64, hi: i64, f: impl Fn(i64) -> i64) -> Self {
        let shift = if lo < 1 { (1 - lo) + (1 - lo) % 2 } else { 0 };
        let top = hi + shift;
        let top = (top + top % 2).max(0) as usize;
        let word = (1..=top as i64).map(|p| (f(p - shift) + shift) as usize).collect();
        Self::canonical(shift as usize, FpfInvolution::trimmed(word))
    }

    /// `t z t` for `t = (a, b)`.
    pub fn conjugate(&self, a: i64, b: i64) -> Self {
        let (lo, hi) = self.window();
        let t = |i: i64| {
            if i == a {
                b
            } else if i == b {
                a
            } else {
                i
            }
        };
        Self::from_fn(lo.min(a).min(b), hi.max(a).max(b), |i| t(self.apply(t(i))))
    }

    pub fn covered_by_conjugation(&self, i: i64, j: i64) -> bool {
        i != j && fpf_cover_criterion(|e| self.apply(e), i.min(j), i.max(j))
    }

    pub fn visible_descents(&self) -> Vec<i64> {
        let (lo, hi) = self.window();
        (lo..=hi)
            .filter(|&i| self.apply(i + 1) < i.min(self.apply(i)))
            .collect()
    }

    /// Transition index lists in `ℤ`; the lower list may contain nonpositive integers.
    pub fn transition_indices(&self, j: i64, k: i64) -> Result<(Vec<i64>, Vec<i64>)> {
        if j >= k || self.apply(j) != k {
            return Err(precondition(format!("need v({j}) = {k} with {j} < {k}")));
        }
        let (lo, hi) = self.window();
        let lower = (lo.min(j) - 4..j)
            .filter(|&i| self.covered_by_conjugation(i, j))
            .collect();
        let upper = (k + 1..=hi.max(k) + 4)
            .rev()
            .filter(|&l| self.covered_by_conjugation(k, l))
            .collect();
        Ok((lower, upper))
    }
}

impl fmt::Display for ShiftedFpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.base, self.offset)
    }
}
