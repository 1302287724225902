//! Set-valued and shifted set-valued tableaux, and backtracking enumeration of
//! their generating functions at a window.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::Window;
use crate::coxeter::{Partition, StrictPartition};
use crate::poly::{BetaInt, Monomial, MultiPoly};

/// A letter of the marked alphabet `1' < 1 < 2' < 2 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MarkedLetter {
    pub value: usize,
    pub primed: bool,
}

impl MarkedLetter {
    pub fn unprimed(value: usize) -> Self {
        MarkedLetter { value, primed: false }
    }

    pub fn primed(value: usize) -> Self {
        MarkedLetter { value, primed: true }
    }

    /// Position in the marked alphabet: `1' ↦ 1`, `1 ↦ 2`, `2' ↦ 3`, ...
    pub fn code(self) -> usize {
        2 * self.value - usize::from(self.primed)
    }

    pub fn from_code(code: usize) -> Self {
        MarkedLetter { value: code.div_ceil(2), primed: code % 2 == 1 }
    }
}

impl Ord for MarkedLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code().cmp(&other.code())
    }
}

impl PartialOrd for MarkedLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MarkedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

/// A filling of the Young diagram of `shape` by nonempty sets of positive
/// integers; `entries[i][j]` is the cell in row `i+1`, column `j+1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetValuedTableau {
    pub shape: Partition,
    pub entries: Vec<Vec<BTreeSet<usize>>>,
}

impl SetValuedTableau {
    fn has_shape(&self) -> bool {
        self.entries.len() == self.shape.len()
            && self.entries.iter().zip(self.shape.parts()).all(|(row, &p)| row.len() == p)
            && self.entries.iter().flatten().all(|s| !s.is_empty() && !s.contains(&0))
    }

    /// Rows weakly increase and columns strictly increase, comparing the
    /// maximum of one cell with the minimum of the next.
    pub fn is_semistandard(&self) -> bool {
        if !self.has_shape() {
            return false;
        }
        let max = |s: &BTreeSet<usize>| *s.iter().next_back().expect("nonempty");
        let min = |s: &BTreeSet<usize>| *s.iter().next().expect("nonempty");
        for (i, row) in self.entries.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if j + 1 < row.len() && max(cell) > min(&row[j + 1]) {
                    return false;
                }
                if let Some(below) = self.entries.get(i + 1).and_then(|r| r.get(j)) {
                    if max(cell) >= min(below) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `|T|`, the total number of entries.
    pub fn size(&self) -> usize {
        self.entries.iter().flatten().map(BTreeSet::len).sum()
    }

    /// `x^T` as an exponent vector.
    pub fn weight(&self) -> Monomial {
        let mut exps = Vec::new();
        for &v in self.entries.iter().flatten().flatten() {
            if exps.len() < v {
                exps.resize(v, 0);
            }
            exps[v - 1] += 1;
        }
        Monomial::new(exps)
    }
}

/// A filling of the shifted diagram of `shape` by nonempty sets of marked
/// letters; `entries[i][j]` is the cell in row `i+1`, column `i+j+1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftedSetValuedTableau {
    pub shape: StrictPartition,
    pub entries: Vec<Vec<BTreeSet<MarkedLetter>>>,
}

impl ShiftedSetValuedTableau {
    fn cell(&self, row: usize, col: usize) -> Option<&BTreeSet<MarkedLetter>> {
        col.checked_sub(row).and_then(|j| self.entries.get(row)?.get(j))
    }

    /// Row neighbours share only unprimed letters and column neighbours only
    /// primed ones, with `max ≤ min` in both directions. With
    /// `diagonal_unprimed`, the main diagonal carries no primed letter.
    pub fn is_semistandard(&self, diagonal_unprimed: bool) -> bool {
        let shaped = self.entries.len() == self.shape.len()
            && self.entries.iter().zip(self.shape.parts()).all(|(row, &p)| row.len() == p)
            && self.entries.iter().flatten().all(|s| !s.is_empty() && s.iter().all(|l| l.value > 0));
        if !shaped {
            return false;
        }
        for (i, row) in self.entries.iter().enumerate() {
            if diagonal_unprimed && row[0].iter().any(|l| l.primed) {
                return false;
            }
            for (j, cell) in row.iter().enumerate() {
                let col = i + j;
                let hi = cell.iter().next_back().expect("nonempty");
                if let Some(right) = self.cell(i, col + 1) {
                    let ok = hi <= right.iter().next().expect("nonempty")
                        && cell.intersection(right).all(|l| !l.primed);
                    if !ok {
                        return false;
                    }
                }
                if let Some(below) = self.cell(i + 1, col) {
                    let ok = hi <= below.iter().next().expect("nonempty")
                        && cell.intersection(below).all(|l| l.primed);
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn size(&self) -> usize {
        self.entries.iter().flatten().map(BTreeSet::len).sum()
    }

    pub fn weight(&self) -> Monomial {
        let mut exps = Vec::new();
        for l in self.entries.iter().flatten().flatten() {
            if exps.len() < l.value {
                exps.resize(l.value, 0);
            }
            exps[l.value - 1] += 1;
        }
        Monomial::new(exps)
    }
}

struct Cell {
    left: Option<usize>,
    up: Option<usize>,
    diagonal: bool,
}

/// Depth-first enumeration of fillings cell by cell in reading order. Letters
/// are integer codes; for the marked alphabet a code is [`MarkedLetter::code`].
struct Enumerator {
    cells: Vec<Cell>,
    marked: bool,
    diagonal_unprimed: bool,
    letters: usize,
    maxdeg: usize,
    ranges: Vec<(usize, usize)>,
    exps: Vec<i32>,
    counts: BTreeMap<(Vec<i32>, usize), u64>,
}

impl Enumerator {
    fn var(&self, code: usize) -> usize {
        if self.marked {
            code.div_ceil(2) - 1
        } else {
            code - 1
        }
    }

    fn allowed(&self, idx: usize, code: usize) -> bool {
        !(self.marked && self.diagonal_unprimed && self.cells[idx].diagonal && code % 2 == 1)
    }

    fn can_start(&self, idx: usize, code: usize) -> bool {
        let cell = &self.cells[idx];
        if let Some(l) = cell.left {
            let hi = self.ranges[l].1;
            let tie_ok = !self.marked || code.is_multiple_of(2);
            if code < hi || (code == hi && !tie_ok) {
                return false;
            }
        }
        if let Some(u) = cell.up {
            let hi = self.ranges[u].1;
            let tie_ok = self.marked && code % 2 == 1;
            if code < hi || (code == hi && !tie_ok) {
                return false;
            }
        }
        self.allowed(idx, code)
    }

    fn place(&mut self, idx: usize, used: usize) {
        if idx == self.cells.len() {
            let mut key = self.exps.clone();
            while key.last() == Some(&0) {
                key.pop();
            }
            *self.counts.entry((key, used - self.cells.len())).or_insert(0) += 1;
            return;
        }
        let after = self.cells.len() - idx - 1;
        let budget = self.maxdeg.saturating_sub(used + after);
        if budget == 0 {
            return;
        }
        for code in 1..=self.letters {
            if self.can_start(idx, code) {
                let v = self.var(code);
                self.exps[v] += 1;
                self.extend(idx, code, code, 1, used, budget);
                self.exps[v] -= 1;
            }
        }
    }

    fn extend(&mut self, idx: usize, lo: usize, hi: usize, size: usize, used: usize, budget: usize) {
        self.ranges[idx] = (lo, hi);
        self.place(idx + 1, used + size);
        if size == budget {
            return;
        }
        for code in hi + 1..=self.letters {
            if self.allowed(idx, code) {
                let v = self.var(code);
                self.exps[v] += 1;
                self.extend(idx, lo, code, size + 1, used, budget);
                self.exps[v] -= 1;
            }
        }
    }

    fn run(mut self, nvars: usize) -> MultiPoly {
        if !self.cells.is_empty() {
            self.place(0, 0);
        } else {
            self.counts.insert((Vec::new(), 0), 1);
        }
        let mut out = MultiPoly::zero(nvars);
        for ((exps, d), count) in self.counts {
            out.add_term(Monomial::new(exps), &BetaInt::monomial(count, d));
        }
        out
    }
}

fn cells_of(rows: &[usize], shifted: bool) -> Vec<Cell> {
    let mut index = BTreeMap::new();
    let mut cells = Vec::new();
    for (i, &len) in rows.iter().enumerate() {
        let start = if shifted { i } else { 0 };
        for col in start..start + len {
            let left = (col > start).then(|| index[&(i, col - 1)]);
            let up = i.checked_sub(1).and_then(|r| index.get(&(r, col)).copied());
            index.insert((i, col), cells.len());
            cells.push(Cell { left, up, diagonal: shifted && col == i });
        }
    }
    cells
}

/// `G_λ(x_1, ..., x_n)` modulo degree `> maxdeg`: the sum of
/// `β^{|T|-|λ|} x^T` over semistandard set-valued tableaux of shape `λ`.
pub fn stable_groth_partition(lambda: &Partition, win: &Window) -> MultiPoly {
    let (n, d) = (win.nvars(), win.maxdeg());
    Enumerator {
        cells: cells_of(lambda.parts(), false),
        marked: false,
        diagonal_unprimed: false,
        letters: n,
        maxdeg: d,
        ranges: vec![(0, 0); lambda.size()],
        exps: vec![0; n],
        counts: BTreeMap::new(),
    }
    .run(n)
}

/// Sum of `β^{|T|-|λ|} x^T` over semistandard shifted set-valued tableaux of
/// shape `λ` at the window, optionally only those with unprimed diagonal.
pub fn shifted_set_valued_sum(lambda: &StrictPartition, win: &Window, diagonal_unprimed: bool) -> MultiPoly {
    let (n, d) = (win.nvars(), win.maxdeg());
    Enumerator {
        cells: cells_of(lambda.parts(), true),
        marked: true,
        diagonal_unprimed,
        letters: 2 * n,
        maxdeg: d,
        ranges: vec![(0, 0); lambda.size()],
        exps: vec![0; n],
        counts: BTreeMap::new(),
    }
    .run(n)
}

/// `GP_λ(x_1, ..., x_n)` modulo degree `> maxdeg`.
pub fn gp_partition(lambda: &StrictPartition, win: &Window) -> MultiPoly {
    shifted_set_valued_sum(lambda, win, true)
}
