//! 0-1 matrices stored as dimensions plus a sorted list of ones.
//!
//! Row and column order is semantic: `A` contains `P` when some strictly
//! increasing choice of rows and columns of `A` selects a submatrix with a
//! one wherever `P` has one.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{precondition, Result};

/// A 0-1 matrix. `ones` is sorted in row-major order without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    ones: Vec<(usize, usize)>,
}

/// Witness that `P` occurs in `A`: `rows[i]` and `cols[j]` are the rows and
/// columns of `A` assigned to row `i` and column `j` of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatOccurrence {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl BitMatrix {
    /// Builds a matrix from arbitrary coordinates; duplicates collapse.
    pub fn from_ones<I: IntoIterator<Item = (usize, usize)>>(
        rows: usize,
        cols: usize,
        ones: I,
    ) -> Result<Self> {
        let mut ones: Vec<(usize, usize)> = ones.into_iter().collect();
        if let Some(&(r, c)) = ones.iter().find(|&&(r, c)| r >= rows || c >= cols) {
            return Err(precondition(alloc::format!(
                "one at ({r},{c}) outside a {rows}x{cols} matrix"
            )));
        }
        ones.sort_unstable();
        ones.dedup();
        Ok(BitMatrix { rows, cols, ones })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            ones: Vec::new(),
        }
    }

    /// Builds a matrix from rows of 0/1 entries; every nonzero entry counts
    /// as a one. Rows must share one length.
    pub fn from_rows<R: AsRef<[u8]>>(data: &[R]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.as_ref().len());
        let mut ones = Vec::new();
        for (r, row) in data.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(precondition("matrix rows have different lengths"));
            }
            ones.extend(
                row.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(c, _)| (r, c)),
            );
        }
        Ok(BitMatrix { rows, cols, ones })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Coordinates of the ones in row-major order.
    pub fn ones(&self) -> &[(usize, usize)] {
        &self.ones
    }

    pub fn count_ones(&self) -> usize {
        self.ones.len()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.ones.binary_search(&(r, c)).is_ok()
    }

    /// Same dimensions, keeping only the listed ones.
    pub fn with_ones(&self, ones: Vec<(usize, usize)>) -> Result<Self> {
        BitMatrix::from_ones(self.rows, self.cols, ones)
    }

    pub fn is_all_ones(&self) -> bool {
        self.ones.len() == self.rows * self.cols
    }

    /// Dense row-major grid.
    pub fn to_grid(&self) -> Vec<bool> {
        let mut grid = vec![false; self.rows * self.cols];
        for &(r, c) in &self.ones {
            grid[r * self.cols + c] = true;
        }
        grid
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        let mut out = vec![vec![0u8; self.cols]; self.rows];
        for &(r, c) in &self.ones {
            out[r][c] = 1;
        }
        out
    }

    /// True when every one of `self` is also a one of `other` and the
    /// dimensions agree.
    pub fn is_submatrix_of(&self, other: &BitMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.ones.iter().all(|&(r, c)| other.get(r, c))
    }

    pub fn find(&self, pattern: &BitMatrix) -> Option<MatOccurrence> {
        mat_contains(self, pattern)
    }

    pub fn contains(&self, pattern: &BitMatrix) -> bool {
        mat_contains(self, pattern).is_some()
    }
}

impl fmt::Display for BitMatrix {
    /// One line per row of `0`/`1` characters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for &x in row {
                f.write_str(if x == 1 { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

/// Searches for an occurrence of `pattern` in `a`.
///
/// Backtracks over the pattern's ones in row-major order. A pattern row or
/// column gets its image the first time one of its ones is reached, and the
/// candidates are restricted to the interval left open by the nearest
/// already-placed neighbors (with room for the indices in between).
/// All-zero rows and columns of the pattern are filled in at the end. The
/// empty pattern is contained in everything.
pub fn mat_contains(a: &BitMatrix, pattern: &BitMatrix) -> Option<MatOccurrence> {
    if pattern.rows > a.rows || pattern.cols > a.cols {
        return None;
    }
    if pattern.ones.len() > a.ones.len() {
        return None;
    }
    let mut search = MatSearch {
        grid: a.to_grid(),
        a_rows: a.rows,
        a_cols: a.cols,
        ones: &pattern.ones,
        row_map: vec![usize::MAX; pattern.rows],
        col_map: vec![usize::MAX; pattern.cols],
    };
    if !search.run(0) {
        return None;
    }
    fill_gaps(&mut search.row_map);
    fill_gaps(&mut search.col_map);
    Some(MatOccurrence {
        rows: search.row_map,
        cols: search.col_map,
    })
}

fn fill_gaps(map: &mut [usize]) {
    let mut prev: Option<usize> = None;
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = prev.map_or(0, |p| p + 1);
        }
        prev = Some(*slot);
    }
}

struct MatSearch<'a> {
    grid: Vec<bool>,
    a_rows: usize,
    a_cols: usize,
    ones: &'a [(usize, usize)],
    row_map: Vec<usize>,
    col_map: Vec<usize>,
}

/// Feasible image interval for index `idx` of a map of length `map.len()`
/// into `0..size`, given the already assigned entries.
fn open_interval(map: &[usize], idx: usize, size: usize) -> (usize, usize) {
    let len = map.len();
    let mut lo = idx;
    for k in (0..idx).rev() {
        if map[k] != usize::MAX {
            lo = map[k] + (idx - k);
            break;
        }
    }
    let mut hi = size as isize - (len - idx) as isize;
    for (k, &m) in map.iter().enumerate().skip(idx + 1) {
        if m != usize::MAX {
            hi = m as isize - (k - idx) as isize;
            break;
        }
    }
    if hi < lo as isize {
        (1, 0)
    } else {
        (lo, hi as usize)
    }
}

impl MatSearch<'_> {
    fn run(&mut self, t: usize) -> bool {
        if t == self.ones.len() {
            return true;
        }
        let (i, j) = self.ones[t];
        let (r_lo, r_hi) = if self.row_map[i] != usize::MAX {
            (self.row_map[i], self.row_map[i])
        } else {
            open_interval(&self.row_map, i, self.a_rows)
        };
        let row_fresh = self.row_map[i] == usize::MAX;
        let col_fresh = self.col_map[j] == usize::MAX;
        for r in r_lo..=r_hi {
            self.row_map[i] = r;
            let (c_lo, c_hi) = if col_fresh {
                open_interval(&self.col_map, j, self.a_cols)
            } else {
                (self.col_map[j], self.col_map[j])
            };
            if c_lo <= c_hi {
                for c in c_lo..=c_hi {
                    if !self.grid[r * self.a_cols + c] {
                        continue;
                    }
                    self.col_map[j] = c;
                    if self.run(t + 1) {
                        return true;
                    }
                }
                if col_fresh {
                    self.col_map[j] = usize::MAX;
                }
            }
        }
        if row_fresh {
            self.row_map[i] = usize::MAX;
        }
        false
    }
}

/// Exact number of distinct (row set, column set) pairs of `a` whose
/// submatrix dominates `pattern`.
///
/// Enumerates row sets, then counts column sets with a left-to-right DP:
/// pattern column `j` may land on column `c` when every pattern row that
/// has a one in column `j` is selected onto a row with a one at `c`.
pub fn count_pattern_copies(a: &BitMatrix, pattern: &BitMatrix) -> u128 {
    let (pr, pc) = (pattern.rows, pattern.cols);
    if pr > a.rows || pc > a.cols {
        return 0;
    }
    if pr == 0 {
        return binomial(a.cols as u128, pc as u128);
    }
    assert!(
        pr <= 64,
        "patterns with more than 64 rows are not supported"
    );
    let grid = a.to_grid();
    let mut need = vec![0u64; pc];
    for &(i, j) in &pattern.ones {
        need[j] |= 1 << i;
    }
    let mut total: u128 = 0;
    let mut rows: Vec<usize> = (0..pr).collect();
    loop {
        // ways[j]: number of ways to place pattern columns 0..j in the prefix.
        let mut ways = vec![0u128; pc + 1];
        ways[0] = 1;
        for c in 0..a.cols {
            let mut have = 0u64;
            for (i, &r) in rows.iter().enumerate() {
                if grid[r * a.cols + c] {
                    have |= 1 << i;
                }
            }
            for j in (0..pc).rev() {
                if need[j] & !have == 0 {
                    ways[j + 1] += ways[j];
                }
            }
        }
        total += ways[pc];
        if !next_combination(&mut rows, a.rows) {
            break;
        }
    }
    total
}

/// Advances `comb` to the next k-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for t in i + 1..k {
                comb[t] = comb[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
