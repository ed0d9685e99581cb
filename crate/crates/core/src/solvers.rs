//! Exact solvers for the longest avoiding sub-object and brute-force
//! minimization oracles over all small instances.
//!
//! LSS and LSM are both "largest subset of items that avoids a hereditary
//! property", so they share one branch-and-bound engine. Items are decided
//! keep-first in order; a branch is cut when the kept count plus the optimum
//! of the remaining suffix cannot reach the target. Suffix optima are
//! computed shortest-first, each one seeding the next (a Russian-doll
//! search), so every bound used is exact for the suffix.
//!
//! Exponential worst case is expected. Every search counts nodes against a
//! budget and fails with [`Error::BudgetExceeded`] instead of approximating.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{precondition, Error, Result};
use crate::matrix::{mat_contains, next_combination, BitMatrix};
use crate::sequence::{alternation, seq_contains, Sequence};

pub const DEFAULT_NODE_BUDGET: u64 = 500_000_000;
/// Largest `m` accepted by [`ss_oracle`] unless the caller raises it.
pub const DEFAULT_SS_LIMIT: usize = 10;
/// Largest `m` accepted by [`sm_oracle`] unless the caller raises it.
pub const DEFAULT_SM_LIMIT: usize = 5;

/// Outcome of an exact solve. `witness` is the retained sub-object: kept
/// positions of the sequence, or the matrix with the dropped ones zeroed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub nodes: u64,
}

/// Outcome of an `ss` / `sm` oracle run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult<I> {
    pub value: usize,
    /// First minimizer in enumeration order.
    pub argmin: I,
    pub instances: u64,
    pub nodes: u64,
}

struct Counter {
    nodes: u64,
    budget: u64,
}

impl Counter {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }
}

/// Item sets closed under taking subsets.
trait Hereditary {
    fn len(&self) -> usize;
    /// `kept` is sorted and already known to be free without its last item.
    fn is_free(&self, kept: &[usize]) -> bool;
}

struct SeqItems<'a> {
    u: &'a Sequence,
    v: &'a Sequence,
}

impl Hereditary for SeqItems<'_> {
    fn len(&self) -> usize {
        self.u.len()
    }

    fn is_free(&self, kept: &[usize]) -> bool {
        if kept.len() < self.v.len() {
            return true;
        }
        seq_contains(&self.u.subsequence(kept), self.v).is_none()
    }
}

struct MatItems<'a> {
    a: &'a BitMatrix,
    p: &'a BitMatrix,
}

impl Hereditary for MatItems<'_> {
    fn len(&self) -> usize {
        self.a.count_ones()
    }

    fn is_free(&self, kept: &[usize]) -> bool {
        if kept.len() < self.p.count_ones() {
            return true;
        }
        let ones = self.a.ones();
        let sub = BitMatrix::from_ones(self.a.rows(), self.a.cols(), kept.iter().map(|&i| ones[i]))
            .expect("kept ones lie inside the host");
        mat_contains(&sub, self.p).is_none()
    }
}

struct Doll<'a, H> {
    items: &'a H,
    /// suffix_best[i]: optimum over items i..len.
    suffix_best: Vec<usize>,
    counter: Counter,
}

impl<H: Hereditary> Doll<'_, H> {
    /// Extends `kept` with items from `pos..` until it has `target` items.
    /// Keep-first order makes the first success the lexicographically
    /// smallest position set of that size.
    fn extend(&mut self, pos: usize, kept: &mut Vec<usize>, target: usize) -> Result<bool> {
        self.counter.tick()?;
        if kept.len() == target {
            return Ok(true);
        }
        if pos == self.items.len() || kept.len() + self.suffix_best[pos] < target {
            return Ok(false);
        }
        kept.push(pos);
        if self.items.is_free(kept) && self.extend(pos + 1, kept, target)? {
            return Ok(true);
        }
        kept.pop();
        self.extend(pos + 1, kept, target)
    }
}

fn solve_hereditary<H: Hereditary>(items: &H, budget: u64) -> Result<(Vec<usize>, u64)> {
    let n = items.len();
    let mut doll = Doll {
        items,
        suffix_best: vec![0; n + 1],
        counter: Counter { nodes: 0, budget },
    };
    // The optimum on i.. is either the optimum on i+1.. or one more, and in
    // the latter case every optimal set uses item i.
    for i in (0..n).rev() {
        let target = doll.suffix_best[i + 1] + 1;
        let mut kept = vec![i];
        doll.suffix_best[i] = if items.is_free(&kept) && doll.extend(i + 1, &mut kept, target)? {
            target
        } else {
            target - 1
        };
    }
    let best = doll.suffix_best[0];
    let mut kept = Vec::with_capacity(best);
    let found = doll.extend(0, &mut kept, best)?;
    debug_assert!(found);
    Ok((kept, doll.counter.nodes))
}

/// Longest `v`-free subsequence of `u`; the witness is the kept positions.
pub fn lss_exact(u: &Sequence, v: &Sequence, budget: u64) -> Result<SolveResult<Vec<usize>>> {
    if v.is_empty() {
        return Err(precondition("lss_exact needs a nonempty pattern"));
    }
    let v = v.normalize();
    let items = SeqItems { u, v: &v };
    let (kept, nodes) = solve_hereditary(&items, budget)?;
    Ok(SolveResult {
        value: kept.len(),
        witness: kept,
        nodes,
    })
}

/// Most ones in a `p`-avoiding matrix obtained from `a` by turning ones
/// into zeroes; the witness is that matrix.
pub fn lsm_exact(a: &BitMatrix, p: &BitMatrix, budget: u64) -> Result<SolveResult<BitMatrix>> {
    if p.count_ones() == 0 {
        return Err(precondition(
            "lsm_exact needs a pattern with at least one one",
        ));
    }
    let (kept, nodes) = solve_hereditary(&MatItems { a, p }, budget)?;
    let ones = a.ones();
    let witness = a.with_ones(kept.iter().map(|&i| ones[i]).collect())?;
    Ok(SolveResult {
        value: kept.len(),
        witness,
        nodes,
    })
}

/// Largest number of ones in an `n x n` matrix avoiding `p`, with one
/// extremal matrix as the witness.
///
/// Searches row by row (each row a bitmask, denser rows first). The bound
/// for the rows still open is the exact optimum for a matrix with that many
/// rows, computed for 1, 2, ... rows in turn. This is deliberately a
/// different route from [`lsm_exact`] on the all-ones host.
pub fn ex_exact(n: usize, p: &BitMatrix, budget: u64) -> Result<SolveResult<BitMatrix>> {
    if n == 0 {
        return Err(precondition("ex_exact needs n >= 1"));
    }
    if n > 16 {
        return Err(precondition("ex_exact supports n <= 16"));
    }
    if p.count_ones() == 0 {
        return Err(precondition(
            "ex_exact needs a pattern with at least one one",
        ));
    }
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| (core::cmp::Reverse(m.count_ones()), *m));
    let mut search = RowSearch {
        n,
        p,
        masks,
        best_rows: vec![0; n + 1],
        rows: Vec::with_capacity(n),
        witness: Vec::new(),
        counter: Counter { nodes: 0, budget },
    };
    for height in 1..=n {
        // Incumbent: the (height-1)-row optimum plus an empty row.
        let mut best = search.best_rows[height - 1];
        search.witness.push(0);
        search.fill(height, 0, &mut best)?;
        search.best_rows[height] = best;
    }
    let witness = BitMatrix::from_ones(n, n, mask_ones(&search.witness, n))?;
    Ok(SolveResult {
        value: search.best_rows[n],
        witness,
        nodes: search.counter.nodes,
    })
}

fn mask_ones(rows: &[u32], n: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    rows.iter().enumerate().flat_map(move |(r, &mask)| {
        (0..n)
            .filter(move |c| mask >> c & 1 == 1)
            .map(move |c| (r, c))
    })
}

struct RowSearch<'a> {
    n: usize,
    p: &'a BitMatrix,
    masks: Vec<u32>,
    best_rows: Vec<usize>,
    rows: Vec<u32>,
    witness: Vec<u32>,
    counter: Counter,
}

impl RowSearch<'_> {
    fn fill(&mut self, height: usize, ones: usize, best: &mut usize) -> Result<()> {
        self.counter.tick()?;
        let placed = self.rows.len();
        if placed == height {
            if ones > *best {
                *best = ones;
                self.witness.clone_from(&self.rows);
            }
            return Ok(());
        }
        let open = height - placed;
        for idx in 0..self.masks.len() {
            let mask = self.masks[idx];
            let row_ones = mask.count_ones() as usize;
            // Masks are sorted by decreasing weight: once this row cannot
            // beat the incumbent, neither can any later one.
            if ones + row_ones + self.best_rows[open - 1] <= *best {
                break;
            }
            self.rows.push(mask);
            if self.prefix_free() {
                self.fill(height, ones + row_ones, best)?;
            }
            self.rows.pop();
        }
        Ok(())
    }

    fn prefix_free(&self) -> bool {
        let m = BitMatrix::from_ones(self.rows.len(), self.n, mask_ones(&self.rows, self.n))
            .expect("rows fit");
        mat_contains(&m, self.p).is_none()
    }
}

/// Minimum of [`lss_exact`] over all sequences of length `m`.
///
/// Enumerates restricted-growth strings, one per isomorphism class, in
/// lexicographic order; the argmin is the first minimizer met.
pub fn ss_oracle(
    m: usize,
    v: &Sequence,
    limit: usize,
    budget: u64,
) -> Result<OracleResult<Sequence>> {
    if m > limit {
        return Err(Error::BudgetExceeded {
            budget: limit as u64,
        });
    }
    if v.is_empty() {
        return Err(precondition("ss_oracle needs a nonempty pattern"));
    }
    let mut rgs = RestrictedGrowth::new(m);
    let mut result: Option<OracleResult<Sequence>> = None;
    let mut instances = 0u64;
    let mut nodes = 0u64;
    loop {
        let u = Sequence::new(rgs.current().to_vec());
        let solved = lss_exact(&u, v, budget.saturating_sub(nodes))?;
        instances += 1;
        nodes += solved.nodes;
        if result.as_ref().is_none_or(|r| solved.value < r.value) {
            result = Some(OracleResult {
                value: solved.value,
                argmin: u,
                instances: 0,
                nodes: 0,
            });
        }
        if !rgs.advance() {
            break;
        }
    }
    let mut result = result.expect("at least one instance");
    result.instances = instances;
    result.nodes = nodes;
    Ok(result)
}

/// Restricted-growth strings of a fixed length in lexicographic order:
/// `s[0] = 0` and `s[i] <= 1 + max(s[..i])`.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    s: Vec<u32>,
    /// prefix_max[i] = max(s[..=i])
    prefix_max: Vec<u32>,
}

impl RestrictedGrowth {
    pub fn new(len: usize) -> Self {
        RestrictedGrowth {
            s: vec![0; len],
            prefix_max: vec![0; len],
        }
    }

    pub fn current(&self) -> &[u32] {
        &self.s
    }

    pub fn advance(&mut self) -> bool {
        let n = self.s.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.s[i] <= self.prefix_max[i - 1] {
                self.s[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.s[i]);
                for t in i + 1..n {
                    self.s[t] = 0;
                    self.prefix_max[t] = self.prefix_max[i];
                }
                return true;
            }
        }
        false
    }
}

/// Minimum of [`lsm_exact`] over all matrices with `m` ones.
///
/// Every matrix with `m` ones reduces, by deleting empty rows and columns,
/// to one with at most `m` rows and columns and no empty line; those are
/// enumerated by (rows, cols, placement) in lexicographic order and the
/// first minimizer is returned.
pub fn sm_oracle(
    m: usize,
    p: &BitMatrix,
    limit: usize,
    budget: u64,
) -> Result<OracleResult<BitMatrix>> {
    if m > limit {
        return Err(Error::BudgetExceeded {
            budget: limit as u64,
        });
    }
    if p.count_ones() == 0 {
        return Err(precondition(
            "sm_oracle needs a pattern with at least one one",
        ));
    }
    if m == 0 {
        return Ok(OracleResult {
            value: 0,
            argmin: BitMatrix::zeros(0, 0),
            instances: 1,
            nodes: 0,
        });
    }
    let mut best: Option<(usize, BitMatrix)> = None;
    let mut instances = 0u64;
    let mut nodes = 0u64;
    for rows in 1..=m {
        for cols in 1..=m {
            let cells = rows * cols;
            if cells < m || rows > m || cols > m {
                continue;
            }
            let mut comb: Vec<usize> = (0..m).collect();
            loop {
                if covers_lines(&comb, rows, cols) {
                    let a = BitMatrix::from_ones(
                        rows,
                        cols,
                        comb.iter().map(|&x| (x / cols, x % cols)),
                    )?;
                    let solved = lsm_exact(&a, p, budget.saturating_sub(nodes))?;
                    instances += 1;
                    nodes += solved.nodes;
                    if best.as_ref().is_none_or(|(v, _)| solved.value < *v) {
                        best = Some((solved.value, a));
                    }
                }
                if !next_combination(&mut comb, cells) {
                    break;
                }
            }
        }
    }
    let (value, argmin) = best.ok_or_else(|| precondition(format!("no matrix with {m} ones")))?;
    Ok(OracleResult {
        value,
        argmin,
        instances,
        nodes,
    })
}

fn covers_lines(cells: &[usize], rows: usize, cols: usize) -> bool {
    let mut row_hit = 0u64;
    let mut col_hit = 0u64;
    for &x in cells {
        row_hit |= 1 << (x / cols);
        col_hit |= 1 << (x % cols);
    }
    row_hit.count_ones() as usize == rows && col_hit.count_ones() as usize == cols
}

/// Upper bound on the longest subsequence of `u` realizable by polynomials
/// of degree at most `k`: two such polynomials cross at most `k` times, so
/// a realizable sequence avoids the alternation of length `k + 2`.
pub fn lsp_upper(u: &Sequence, k: usize, budget: u64) -> Result<usize> {
    if k == 0 {
        return Err(precondition("lsp_upper needs degree k >= 1"));
    }
    Ok(lss_exact(u, &alternation(k + 2), budget)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{all_ones, block_sequence, column, diagonal, l_shape, row};

    const B: u64 = DEFAULT_NODE_BUDGET;

    fn s(text: &str) -> Sequence {
        Sequence::from_tokens(text.chars())
    }

    /// Longest v-free subsequence by trying all 2^n subsets.
    fn brute_lss(u: &Sequence, v: &Sequence) -> usize {
        let n = u.len();
        (0u32..1 << n)
            .filter_map(|mask| {
                let pos: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                seq_contains(&u.subsequence(&pos), v)
                    .is_none()
                    .then_some(pos.len())
            })
            .max()
            .unwrap()
    }

    fn brute_lex_min_witness(u: &Sequence, v: &Sequence) -> Vec<usize> {
        let n = u.len();
        let best = brute_lss(u, v);
        (0u32..1 << n)
            .map(|mask| {
                (0..n)
                    .filter(|&i| mask >> i & 1 == 1)
                    .collect::<Vec<usize>>()
            })
            .filter(|pos| pos.len() == best && seq_contains(&u.subsequence(pos), v).is_none())
            .min()
            .unwrap()
    }

    fn brute_lsm(a: &BitMatrix, p: &BitMatrix) -> usize {
        let ones = a.ones();
        (0u32..1 << ones.len())
            .filter_map(|mask| {
                let kept: Vec<_> = (0..ones.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| ones[i])
                    .collect();
                let sub = a.with_ones(kept.clone()).unwrap();
                mat_contains(&sub, p).is_none().then_some(kept.len())
            })
            .max()
            .unwrap()
    }

    #[test]
    fn lss_examples() {
        assert_eq!(lss_exact(&s("abab"), &s("abab"), B).unwrap().value, 3);
        assert_eq!(lss_exact(&s("aaaa"), &s("aa"), B).unwrap().value, 1);
        // Frozen from brute_lss over all 2^9 subsets.
        assert_eq!(brute_lss(&s("abcabcabc"), &s("abab")), 5);
        assert_eq!(lss_exact(&s("abcabcabc"), &s("abab"), B).unwrap().value, 5);
        assert_eq!(
            lss_exact(&Sequence::default(), &s("a"), B).unwrap().value,
            0
        );
        assert!(lss_exact(&s("ab"), &Sequence::default(), B).is_err());
    }

    #[test]
    fn lss_witness_is_lexicographically_smallest() {
        let r = lss_exact(&s("abab"), &s("abab"), B).unwrap();
        assert_eq!(r.witness, vec![0, 1, 2]);
        for (u, v) in [
            ("abcabcabc", "abab"),
            ("abcabcabc", "aba"),
            ("aabbab", "abab"),
            ("abcbca", "aab"),
        ] {
            let (u, v) = (s(u), s(v));
            let r = lss_exact(&u, &v, B).unwrap();
            assert_eq!(r.witness, brute_lex_min_witness(&u, &v), "u={u} v={v}");
        }
    }

    #[test]
    fn lss_matches_brute_force() {
        let patterns = ["aa", "ab", "aba", "abab", "abc", "aab", "abba"];
        for len in 0..=7u32 {
            for code in 0..3u32.pow(len) {
                let mut c = code;
                let u = Sequence::new(
                    (0..len)
                        .map(|_| {
                            let x = c % 3;
                            c /= 3;
                            x
                        })
                        .collect(),
                );
                for p in patterns {
                    let v = s(p);
                    let r = lss_exact(&u, &v, B).unwrap();
                    assert_eq!(r.value, brute_lss(&u, &v), "u={u} v={v}");
                    assert_eq!(r.witness.len(), r.value);
                    assert!(seq_contains(&u.subsequence(&r.witness), &v).is_none());
                    assert_eq!(r.value == u.len(), seq_contains(&u, &v).is_none());
                }
            }
        }
    }

    #[test]
    fn lsm_examples() {
        let sq = all_ones(2, 2).unwrap();
        assert_eq!(lsm_exact(&sq, &sq, B).unwrap().value, 3);
        assert_eq!(
            lsm_exact(&sq, &BitMatrix::from_rows(&[[1u8]]).unwrap(), B)
                .unwrap()
                .value,
            0
        );
        let big = all_ones(3, 3).unwrap();
        assert_eq!(brute_lsm(&big, &sq), 6);
        let r = lsm_exact(&big, &sq, B).unwrap();
        assert_eq!(r.value, 6);
        assert!(r.witness.is_submatrix_of(&big));
        assert!(mat_contains(&r.witness, &sq).is_none());
        assert!(lsm_exact(&big, &BitMatrix::zeros(1, 1), B).is_err());
    }

    #[test]
    fn lsm_matches_brute_force() {
        let patterns = [
            all_ones(2, 2).unwrap(),
            l_shape(),
            diagonal(2).unwrap(),
            row(3).unwrap(),
        ];
        let hosts = [(3usize, 3usize), (2, 4), (4, 3)];
        let mut seed = 0x2545F4914F6CDD1Du64;
        for &(rows, cols) in &hosts {
            for _ in 0..40 {
                seed ^= seed << 13;
                seed ^= seed >> 7;
                seed ^= seed << 17;
                let ones: Vec<_> = (0..rows * cols)
                    .filter(|b| seed >> b & 1 == 1)
                    .map(|b| (b / cols, b % cols))
                    .collect();
                let a = BitMatrix::from_ones(rows, cols, ones).unwrap();
                for p in &patterns {
                    let r = lsm_exact(&a, p, B).unwrap();
                    assert_eq!(r.value, brute_lsm(&a, p), "a=\n{a}");
                    assert!(mat_contains(&r.witness, p).is_none());
                    assert_eq!(r.witness.count_ones(), r.value);
                }
            }
        }
    }

    #[test]
    fn ex_examples() {
        let sq = all_ones(2, 2).unwrap();
        assert_eq!(ex_exact(2, &sq, B).unwrap().value, 3);
        assert_eq!(ex_exact(3, &sq, B).unwrap().value, 6);
        assert_eq!(ex_exact(4, &sq, B).unwrap().value, 9);
        for n in 1..4 {
            assert_eq!(
                ex_exact(n, &BitMatrix::from_rows(&[[1u8]]).unwrap(), B)
                    .unwrap()
                    .value,
                0
            );
        }
        assert_eq!(ex_exact(4, &diagonal(2).unwrap(), B).unwrap().value, 7);
        // Zarankiewicz z(5; 2) = 12.
        let r = ex_exact(5, &sq, B).unwrap();
        assert_eq!(r.value, 12);
        assert_eq!(r.witness.count_ones(), 12);
        assert!(mat_contains(&r.witness, &sq).is_none());
        assert!(ex_exact(0, &sq, B).is_err());
        assert!(ex_exact(3, &sq, 5).is_err());
    }

    #[test]
    fn ex_agrees_with_lsm_on_all_ones_hosts() {
        let patterns = [
            all_ones(2, 2).unwrap(),
            l_shape(),
            diagonal(2).unwrap(),
            row(2).unwrap(),
            diagonal(3).unwrap(),
        ];
        for n in 1..=4 {
            for p in &patterns {
                let host = all_ones(n, n).unwrap();
                assert_eq!(
                    lsm_exact(&host, p, B).unwrap().value,
                    ex_exact(n, p, B).unwrap().value,
                    "n={n} p=\n{p}"
                );
            }
        }
    }

    #[test]
    fn restricted_growth_counts_are_bell_numbers() {
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate().skip(1) {
            let mut g = RestrictedGrowth::new(n);
            let mut count = 1;
            let mut prev = g.current().to_vec();
            while g.advance() {
                assert!(g.current() > &prev[..]);
                assert!(Sequence::new(g.current().to_vec()).is_normalized());
                prev = g.current().to_vec();
                count += 1;
            }
            assert_eq!(count, b, "n={n}");
        }
    }

    #[test]
    fn ss_oracle_examples() {
        assert_eq!(ss_oracle(5, &s("aa"), 10, B).unwrap().value, 1);
        assert_eq!(ss_oracle(5, &s("ab"), 10, B).unwrap().value, 1);
        let r = ss_oracle(4, &s("abab"), 10, B).unwrap();
        assert_eq!((r.value, r.instances), (3, 15));
        assert_eq!(r.argmin, s("abab"));
        assert!(ss_oracle(11, &s("aa"), 10, B).is_err());
        assert_eq!(ss_oracle(0, &s("aa"), 10, B).unwrap().value, 0);
    }

    #[test]
    fn sm_oracle_examples() {
        let one = BitMatrix::from_rows(&[[1u8]]).unwrap();
        assert_eq!(sm_oracle(4, &one, 5, B).unwrap().value, 0);
        assert_eq!(sm_oracle(4, &row(3).unwrap(), 5, B).unwrap().value, 2);
        assert_eq!(sm_oracle(3, &diagonal(2).unwrap(), 5, B).unwrap().value, 1);
        assert_eq!(sm_oracle(4, &column(2).unwrap(), 5, B).unwrap().value, 1);
        assert!(sm_oracle(6, &one, 5, B).is_err());
        // Two ones: 1x2, 2x1, and the two 2x2 permutation matrices.
        assert_eq!(sm_oracle(2, &one, 5, B).unwrap().instances, 4);
    }

    #[test]
    fn oracles_are_monotone() {
        for v in ["aa", "aba", "abab", "aab"] {
            let vals: Vec<usize> = (0..=7)
                .map(|m| ss_oracle(m, &s(v), 10, B).unwrap().value)
                .collect();
            assert!(vals.windows(2).all(|w| w[0] <= w[1]), "{v}: {vals:?}");
        }
        for p in [all_ones(2, 2).unwrap(), l_shape(), diagonal(2).unwrap()] {
            let vals: Vec<usize> = (0..=4)
                .map(|m| sm_oracle(m, &p, 5, B).unwrap().value)
                .collect();
            assert!(vals.windows(2).all(|w| w[0] <= w[1]), "{vals:?}");
        }
    }

    #[test]
    fn lsp_upper_examples() {
        // Frozen from brute_lss: "abb" at positions 0,1,3 is aba-free.
        assert_eq!(brute_lss(&s("abab"), &s("aba")), 3);
        assert_eq!(lsp_upper(&s("abab"), 1, B).unwrap(), 3);
        assert_eq!(lsp_upper(&s("abcdefg"), 2, B).unwrap(), 7);
        assert_eq!(lsp_upper(&Sequence::new(vec![0; 9]), 2, B).unwrap(), 9);
        assert!(lsp_upper(&s("ab"), 0, B).is_err());
        // Block sequences: ss(m, abab) sandwich at k=2,3.
        for k in 2..=3 {
            let v = lss_exact(&block_sequence(k).unwrap(), &s("abab"), B)
                .unwrap()
                .value;
            assert!(k <= v && v < 3 * k);
        }
    }
}
