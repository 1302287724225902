//! Integer partitions and strict partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates monotonicity; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive and weakly decreasing",
            });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Self {
        let width = self.part(1);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Sorts an arbitrary sequence of nonnegative integers into a partition.
    pub fn from_unsorted(mut seq: Vec<usize>) -> Self {
        seq.retain(|&c| c > 0);
        seq.sort_unstable_by(|a, b| b.cmp(a));
        Partition(seq)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out, false);
        out.into_iter().map(Partition).collect()
    }
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, strict: bool) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        current.push(p);
        let next_max = if strict { p - 1 } else { p };
        fill(rest - p, next_max, current, out, strict);
        current.pop();
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let p = Partition::new(parts)?;
        if !p.is_strict() {
            return Err(Error::InvalidPartition {
                parts: p.0,
                reason: "parts must be strictly decreasing",
            });
        }
        Ok(StrictPartition(p))
    }

    pub fn empty() -> Self {
        StrictPartition(Partition::empty())
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.part(i)
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// All strict partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out, true);
        out.into_iter()
            .map(|p| StrictPartition(Partition(p)))
            .collect()
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        StrictPartition::new(p.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `""` and `"0"` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap().parts(), &[2, 1]);
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("3,1".parse::<StrictPartition>().unwrap().parts(), &[3, 1]);
    }

    #[test]
    fn transpose_and_counts() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.transpose().parts(), &[2, 1, 1]);
        assert_eq!(p.transpose().transpose(), p);
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        let strict: Vec<usize> = (0..8).map(|n| StrictPartition::all_of_size(n).len()).collect();
        assert_eq!(strict, vec![1, 1, 1, 2, 2, 3, 4, 5]);
    }
}
