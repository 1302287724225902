//! Finitely supported permutations of the positive integers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{format_word, parse_word, Partition};

/// A permutation of `{1, 2, 3, ...}` fixing all but finitely many points.
///
/// Stored as the one-line word `w(1) w(2) ... w(n)` for the least `n` with
/// `w(i) = i` for every `i > n`. The identity is the empty word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    oneline: Vec<usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { oneline: Vec::new() }
    }

    /// Builds a permutation from a one-line word on `{1..n}`, trimming fixed
    /// points at the end.
    pub fn from_oneline(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(word));
            }
            seen[v] = true;
        }
        Ok(Self::trimmed(word))
    }

    fn trimmed(mut word: Vec<usize>) -> Self {
        while let Some(&last) = word.last() {
            if last == word.len() {
                word.pop();
            } else {
                break;
            }
        }
        Permutation { oneline: word }
    }

    /// The longest element `n ... 3 2 1` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Self::trimmed((1..=n).rev().collect())
    }

    pub fn simple(i: usize) -> Self {
        assert!(i >= 1);
        Self::identity().swap_positions(i, i + 1)
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// Least `n` with `w(i) = i` for all `i > n`.
    pub fn support(&self) -> usize {
        self.oneline.len()
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.oneline.len() {
            self.oneline[i - 1]
        } else {
            i
        }
    }

    /// One-line word padded with fixed points to length `n` (at least the support).
    pub fn word_of_len(&self, n: usize) -> Vec<usize> {
        (1..=n.max(self.support())).map(|i| self.apply(i)).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.support()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { oneline: inv }
    }

    /// The product `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.support().max(other.support());
        Self::trimmed((1..=n).map(|i| self.apply(other.apply(i))).collect())
    }

    /// Right multiplication by the transposition `(i,j)`: swaps the entries in
    /// positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut word = self.word_of_len(i.max(j));
        word.swap(i - 1, j - 1);
        Self::trimmed(word)
    }

    /// Left multiplication by the transposition `(a,b)`: swaps the values `a` and `b`.
    pub fn swap_values(&self, a: usize, b: usize) -> Self {
        let word = self
            .word_of_len(a.max(b))
            .into_iter()
            .map(|v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
            .collect();
        Self::trimmed(word)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.oneline;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn has_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.support()).filter(|&i| self.has_descent(i)).collect()
    }

    /// A reduced word `(i_1, ..., i_l)` with `w = s_{i_1} ... s_{i_l}`.
    ///
    /// The smallest right descent is stripped off repeatedly, so the word is
    /// read back to front.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.support()).find(|&i| w.has_descent(i)) {
            word.push(i);
            w = w.swap_positions(i, i + 1);
        }
        word.reverse();
        word
    }

    /// The product `s_{i_1} s_{i_2} ... s_{i_l}`.
    pub fn from_word(word: &[usize]) -> Self {
        word.iter()
            .fold(Self::identity(), |w, &i| w.swap_positions(i, i + 1))
    }

    /// True iff `w ⋖ w(i,j)` in Bruhat order.
    pub fn covered_by_transposition(&self, i: usize, j: usize) -> bool {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        if i == j {
            return false;
        }
        let (lo, hi) = (self.apply(i), self.apply(j));
        lo < hi && (i + 1..j).all(|e| !(lo < self.apply(e) && self.apply(e) < hi))
    }

    /// The permutation `1^m × w`.
    pub fn shift(&self, m: usize) -> Self {
        if self.is_identity() {
            return Self::identity();
        }
        let word = (1..=m)
            .chain(self.oneline.iter().map(|&v| v + m))
            .collect();
        Permutation { oneline: word }
    }

    /// Lists all permutations of `S_n`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        permute(&mut word, 0, &mut out);
        out.sort();
        out
    }
}

fn permute(word: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k == word.len() {
        out.push(Permutation::trimmed(word.clone()));
        return;
    }
    for i in k..word.len() {
        word.swap(k, i);
        permute(word, k + 1, out);
        word.swap(k, i);
    }
}

pub fn perm_length(w: &Permutation) -> usize {
    w.length()
}

pub fn reduced_word(w: &Permutation) -> Vec<usize> {
    w.reduced_word()
}

/// `w ⋖ w(i,j)`: `w(i) < w(j)` and no `e` strictly between `i` and `j` has a
/// value strictly between `w(i)` and `w(j)`.
pub fn bruhat_cover_up(w: &Permutation, i: usize, j: usize) -> bool {
    w.covered_by_transposition(i, j)
}

/// The indices `j < k` with `v ⋖ v(j,k)` (increasing) and `l > k` with
/// `v ⋖ v(k,l)` (decreasing).
pub fn transition_indices_perm(v: &Permutation, k: usize) -> (Vec<usize>, Vec<usize>) {
    let below = (1..k).filter(|&j| v.covered_by_transposition(j, k)).collect();
    // v(l) = l for l > support; a cover (k,l) needs every fixed point strictly
    // between to lie outside (v(k), l), so l <= max(support, k) + 1.
    let bound = v.support().max(k) + 1;
    let above = (k + 1..=bound)
        .rev()
        .filter(|&l| v.covered_by_transposition(k, l))
        .collect();
    (below, above)
}

pub fn shift_perm(m: usize, w: &Permutation) -> Permutation {
    w.shift(m)
}

/// The Grassmannian permutation `w_λ` with `w(i) = i + λ_{k+1-i}` for `i <= k`
/// and increasing afterwards.
pub fn grassmannian_perm(lambda: &Partition) -> Permutation {
    let k = lambda.len();
    let head: Vec<usize> = (1..=k).map(|i| i + lambda.part(k + 1 - i)).collect();
    let n = head.last().copied().unwrap_or(0).max(k);
    let mut word = head.clone();
    word.extend((1..=n).filter(|v| !head.contains(v)));
    Permutation::trimmed(word)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.oneline.is_empty() {
            return write!(f, "1");
        }
        f.write_str(&format_word(&self.oneline))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::from_oneline(parse_word(s)?)
    }
}
