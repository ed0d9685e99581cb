//! Builders for the extremal instances and forbidden patterns.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{precondition, Result};
use crate::floor_root;
use crate::matrix::BitMatrix;
use crate::sequence::Sequence;

/// `(a_1 ... a_k)^k`: `k` repetitions of a block of `k` distinct letters.
pub fn block_sequence(k: usize) -> Result<Sequence> {
    if k == 0 {
        return Err(precondition("block_sequence needs k >= 1"));
    }
    Ok(Sequence::new((0..k * k).map(|i| (i % k) as u32).collect()))
}

pub fn all_ones(rows: usize, cols: usize) -> Result<BitMatrix> {
    if rows == 0 || cols == 0 {
        return Err(precondition("all_ones needs positive dimensions"));
    }
    BitMatrix::from_ones(
        rows,
        cols,
        (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))),
    )
}

/// The all-ones `floor(m^(r/(r+1))) x floor(m^(1/(r+1)))` host matrix.
///
/// Both dimensions are exact integer roots, so `m = t^(r+1)` gives a
/// `t^r x t` matrix with exactly `m` ones, and in general at most `m` ones.
pub fn upper_construction_allones(m: usize, r: usize) -> Result<BitMatrix> {
    if r < 2 {
        return Err(precondition("upper_construction_allones needs r >= 2"));
    }
    if m == 0 {
        return Err(precondition("upper_construction_allones needs m >= 1"));
    }
    let k = (r + 1) as u32;
    let cols = floor_root(m as u128, k) as usize;
    let m_pow = (m as u128)
        .checked_pow(r as u32)
        .ok_or_else(|| precondition("m^r overflows"))?;
    let rows = floor_root(m_pow, k) as usize;
    all_ones(rows, cols)
}

/// `k x k` identity: `k` ones on the main diagonal.
pub fn diagonal(k: usize) -> Result<BitMatrix> {
    if k == 0 {
        return Err(precondition("diagonal needs k >= 1"));
    }
    BitMatrix::from_ones(k, k, (0..k).map(|i| (i, i)))
}

/// `k` ones on the anti-diagonal.
pub fn anti_diagonal(k: usize) -> Result<BitMatrix> {
    if k == 0 {
        return Err(precondition("anti_diagonal needs k >= 1"));
    }
    BitMatrix::from_ones(k, k, (0..k).map(|i| (i, k - 1 - i)))
}

/// `1 x k` all ones.
pub fn row(k: usize) -> Result<BitMatrix> {
    all_ones(1, k).map_err(|_| precondition("row needs k >= 1"))
}

/// `k x 1` all ones.
pub fn column(k: usize) -> Result<BitMatrix> {
    all_ones(k, 1).map_err(|_| precondition("column needs k >= 1"))
}

/// `[[1,0],[1,1]]`.
pub fn l_shape() -> BitMatrix {
    BitMatrix::from_ones(2, 2, [(0, 0), (1, 0), (1, 1)]).unwrap()
}

/// Inserts a column between columns `c` and `c + 1` whose only one is in
/// row `r`. Row `r` must have ones in both columns `c` and `c + 1`.
pub fn insert_column(p: &BitMatrix, r: usize, c: usize) -> Result<BitMatrix> {
    if c + 1 >= p.cols() || r >= p.rows() || !p.get(r, c) || !p.get(r, c + 1) {
        return Err(precondition(format!(
            "insert_column needs adjacent ones at ({r},{c}) and ({r},{})",
            c + 1
        )));
    }
    let shifted = p
        .ones()
        .iter()
        .map(|&(i, j)| if j > c { (i, j + 1) } else { (i, j) })
        .chain(core::iter::once((r, c + 1)));
    BitMatrix::from_ones(p.rows(), p.cols() + 1, shifted)
}

/// Staircase of `copies` copies of `p`, running from the bottom-left to the
/// top-right; each copy's top-right corner is the next copy's bottom-left
/// corner. Needs ones in both of those corners of `p`.
pub fn corner_join(p: &BitMatrix, copies: usize) -> Result<BitMatrix> {
    if copies == 0 {
        return Err(precondition("corner_join needs at least one copy"));
    }
    let (h, w) = (p.rows(), p.cols());
    if h == 0 || w == 0 || !p.get(h - 1, 0) || !p.get(0, w - 1) {
        return Err(precondition(
            "corner_join needs ones in the bottom-left and top-right corners",
        ));
    }
    let rows = copies * (h - 1) + 1;
    let cols = copies * (w - 1) + 1;
    let mut ones = Vec::with_capacity(copies * p.count_ones());
    for t in 0..copies {
        let row_off = (copies - 1 - t) * (h - 1);
        let col_off = t * (w - 1);
        ones.extend(p.ones().iter().map(|&(i, j)| (i + row_off, j + col_off)));
    }
    BitMatrix::from_ones(rows, cols, ones)
}

/// Letter-by-position incidence matrix of `v`: one row per distinct letter
/// (in first-occurrence order), one column per position.
pub fn pattern_from_sequence(v: &Sequence) -> Result<BitMatrix> {
    if v.is_empty() {
        return Err(precondition(
            "pattern_from_sequence needs a nonempty sequence",
        ));
    }
    let v = v.normalize();
    BitMatrix::from_ones(
        v.distinct_count(),
        v.len(),
        v.letters()
            .iter()
            .enumerate()
            .map(|(j, &x)| (x as usize, j)),
    )
}

/// The four patterns that no weakly monotone chain of ones contains:
/// `[[0,1,0],[1,0,1]]`, `[[0,0,1],[1,1,0]]`, `[[0,1],[1,1]]` and
/// `[[0,0,1],[1,0,0],[0,1,0]]`, in that order.
pub fn monotone_chain_obstructions() -> Vec<BitMatrix> {
    let rows: [&[&[u8]]; 4] = [
        &[&[0, 1, 0], &[1, 0, 1]],
        &[&[0, 0, 1], &[1, 1, 0]],
        &[&[0, 1], &[1, 1]],
        &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]],
    ];
    rows.iter()
        .map(|r| BitMatrix::from_rows(r).unwrap())
        .collect()
}

/// Named pattern families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    AllOnes {
        rows: usize,
        cols: usize,
    },
    Diagonal(usize),
    AntiDiagonal(usize),
    Row(usize),
    Column(usize),
    LShape,
    /// Index into [`monotone_chain_obstructions`].
    Obstruction(usize),
    FromSequence(Sequence),
}

impl PatternSpec {
    pub fn build(&self) -> Result<BitMatrix> {
        match self {
            PatternSpec::AllOnes { rows, cols } => all_ones(*rows, *cols),
            PatternSpec::Diagonal(k) => diagonal(*k),
            PatternSpec::AntiDiagonal(k) => anti_diagonal(*k),
            PatternSpec::Row(k) => row(*k),
            PatternSpec::Column(k) => column(*k),
            PatternSpec::LShape => Ok(l_shape()),
            PatternSpec::Obstruction(i) => monotone_chain_obstructions()
                .into_iter()
                .nth(*i)
                .ok_or_else(|| precondition(format!("no obstruction pattern #{i}"))),
            PatternSpec::FromSequence(v) => pattern_from_sequence(v),
        }
    }
}
