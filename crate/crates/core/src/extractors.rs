//! Constructive lower bounds: each procedure returns a large sub-object that
//! provably avoids a pattern, together with the size it guarantees.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::ceil_sqrt;
use crate::error::{precondition, Result};
use crate::matrix::{mat_contains, BitMatrix};
use crate::sequence::Sequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Probabilistic,
    ErdosSzekeres,
    DichotomyRepeated,
    DichotomyRainbow,
    Thinning,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Probabilistic => "probabilistic",
            Method::ErdosSzekeres => "erdos-szekeres",
            Method::DichotomyRepeated => "dichotomy-repeated",
            Method::DichotomyRainbow => "dichotomy-rainbow",
            Method::Thinning => "thinning",
        }
    }
}

/// An extracted witness.
///
/// For deterministic methods `size >= guarantee` always holds. For the
/// probabilistic method `guarantee` is the floor of the expectation bound
/// `expected_bound`, which the mean over many runs must respect; a single
/// run may fall below it.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtractReport<W> {
    pub witness: W,
    pub size: usize,
    pub guarantee: usize,
    pub method: Method,
    pub seed: Option<u64>,
    pub expected_bound: Option<f64>,
}

/// Parameters of the deletion argument for a supported pattern: the
/// sampling probability exponent and the counting bound exponents.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeletionPlan {
    /// Each one survives with probability `p = m^(-exponent) / 2`.
    pub exponent: f64,
    /// Ones per copy of the pattern, the power of `p` in the copy count.
    pub ones_per_copy: u32,
    /// Copies of the pattern are fewer than `m^copy_power`.
    pub copy_power: u32,
}

impl DeletionPlan {
    /// Plan for `r x r` all-ones patterns (`r >= 2`) and the L-shape
    /// `[[1,0],[1,1]]`; other patterns are not covered by the argument.
    pub fn for_pattern(p: &BitMatrix) -> Result<Self> {
        let r = p.rows();
        if r >= 2 && p.cols() == r && p.is_all_ones() {
            return Ok(DeletionPlan {
                exponent: 1.0 / (r as f64 + 1.0),
                ones_per_copy: (r * r) as u32,
                copy_power: r as u32,
            });
        }
        if *p == crate::constructions::l_shape() {
            return Ok(DeletionPlan {
                exponent: 0.5,
                ones_per_copy: 3,
                copy_power: 2,
            });
        }
        Err(precondition(
            "probabilistic extraction supports r x r all-ones (r >= 2) and the L-shape",
        ))
    }

    pub fn probability(&self, m: usize) -> f64 {
        0.5 * libm::pow(m as f64, -self.exponent)
    }

    /// `m p - p^(ones per copy) m^(copy power)`.
    pub fn expected_bound(&self, m: usize) -> f64 {
        let p = self.probability(m);
        let m = m as f64;
        m * p - libm::pow(p, self.ones_per_copy as f64) * libm::pow(m, self.copy_power as f64)
    }
}

/// Keeps each one of `a` independently with the plan's probability, then
/// deletes the row-major last one of any remaining copy of `p` until none
/// is left. The output is always `p`-free.
pub fn probabilistic_extract<R: Rng + ?Sized>(
    a: &BitMatrix,
    p: &BitMatrix,
    rng: &mut R,
) -> Result<ExtractReport<BitMatrix>> {
    let plan = DeletionPlan::for_pattern(p)?;
    let m = a.count_ones();
    if m == 0 {
        return Err(precondition(
            "probabilistic extraction needs at least one one",
        ));
    }
    let keep_p = plan.probability(m);
    let sampled: Vec<(usize, usize)> = a
        .ones()
        .iter()
        .copied()
        .filter(|_| rng.gen::<f64>() < keep_p)
        .collect();
    let mut current = a.with_ones(sampled)?;
    while let Some(occ) = mat_contains(&current, p) {
        let last = p
            .ones()
            .iter()
            .map(|&(i, j)| (occ.rows[i], occ.cols[j]))
            .max()
            .expect("pattern has ones");
        let kept = current
            .ones()
            .iter()
            .copied()
            .filter(|&x| x != last)
            .collect();
        current = current.with_ones(kept)?;
    }
    let bound = plan.expected_bound(m);
    Ok(ExtractReport {
        size: current.count_ones(),
        witness: current,
        guarantee: libm::floor(bound.max(0.0)) as usize,
        method: Method::Probabilistic,
        seed: None,
        expected_bound: Some(bound),
    })
}

/// Indices of a longest non-decreasing subsequence of `values`, by patience
/// sorting. `reverse` switches to non-increasing. Among equal values the
/// input order is kept.
pub fn longest_monotone(values: &[usize], reverse: bool) -> Vec<usize> {
    let key = |i: usize| {
        if reverse {
            usize::MAX - values[i]
        } else {
            values[i]
        }
    };
    // tails[l]: index ending the best known chain of length l + 1.
    let mut tails: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; values.len()];
    for (i, back) in prev.iter_mut().enumerate() {
        let k = key(i);
        let at = tails.partition_point(|&t| key(t) <= k);
        if at > 0 {
            *back = tails[at - 1];
        }
        if at == tails.len() {
            tails.push(i);
        } else {
            tails[at] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        out.push(i);
        cur = (prev[i] != usize::MAX).then_some(prev[i]);
    }
    out.reverse();
    out
}

/// Scans the ones of `a` row by row, left to right, recording column
/// indices, and keeps the ones of a longest weakly monotone run of that
/// list. Guarantees `ceil(sqrt(m))` ones, and the result avoids all four
/// [`monotone_chain_obstructions`](crate::constructions::monotone_chain_obstructions).
pub fn erdos_szekeres_extract(a: &BitMatrix) -> Result<ExtractReport<BitMatrix>> {
    let m = a.count_ones();
    if m == 0 {
        return Err(precondition(
            "Erdos-Szekeres extraction needs at least one one",
        ));
    }
    let scan: Vec<usize> = a.ones().iter().map(|&(_, c)| c).collect();
    let up = longest_monotone(&scan, false);
    let down = longest_monotone(&scan, true);
    let chosen = if up.len() >= down.len() { up } else { down };
    let witness = a.with_ones(chosen.iter().map(|&i| a.ones()[i]).collect())?;
    Ok(ExtractReport {
        size: witness.count_ones(),
        witness,
        guarantee: ceil_sqrt(m),
        method: Method::ErdosSzekeres,
        seed: None,
        expected_bound: None,
    })
}

/// Either every occurrence of a most frequent letter, when that letter
/// occurs at least `ceil(sqrt(m))` times, or else the first occurrence of
/// every distinct letter (then there are at least `ceil(sqrt(m))` of them).
/// The witness is the list of kept positions.
///
/// A repeated witness avoids every pattern containing `ab`; a rainbow
/// witness avoids every pattern containing `aa`.
pub fn dichotomy_extract(u: &Sequence) -> Result<ExtractReport<Vec<usize>>> {
    let m = u.len();
    if m == 0 {
        return Err(precondition(
            "dichotomy extraction needs a nonempty sequence",
        ));
    }
    let threshold = ceil_sqrt(m);
    let counts = u.letter_counts();
    let top = u
        .letters()
        .iter()
        .copied()
        .max_by(|&x, &y| counts[x as usize].cmp(&counts[y as usize]).then(y.cmp(&x)))
        .expect("nonempty");
    let (positions, method) = if counts[top as usize] >= threshold {
        let pos: Vec<usize> = (0..m).filter(|&i| u.letters()[i] == top).collect();
        (pos, Method::DichotomyRepeated)
    } else {
        let mut seen = vec![false; counts.len()];
        let pos: Vec<usize> = (0..m)
            .filter(|&i| !core::mem::replace(&mut seen[u.letters()[i] as usize], true))
            .collect();
        (pos, Method::DichotomyRainbow)
    };
    debug_assert!(positions.len() >= threshold);
    Ok(ExtractReport {
        size: positions.len(),
        witness: positions,
        guarantee: threshold,
        method,
        seed: None,
        expected_bound: None,
    })
}

/// In every row, keeps the 1st, 3rd, 5th, ... one from the left.
pub fn alternate_thinning(a: &BitMatrix) -> BitMatrix {
    let mut kept = Vec::with_capacity(a.count_ones().div_ceil(2));
    let mut row = usize::MAX;
    let mut idx = 0usize;
    for &(r, c) in a.ones() {
        if r != row {
            row = r;
            idx = 0;
        }
        if idx.is_multiple_of(2) {
            kept.push((r, c));
        }
        idx += 1;
    }
    a.with_ones(kept).expect("subset of valid ones")
}

/// Letter-by-block incidence matrix of a subsequence of `(a_1 ... a_k)^k`
/// given by its (strictly increasing, 0-based) positions: row `i`, column
/// `j` is one when letter `a_i` is kept from block `j`.
pub fn sequence_to_matrix(positions: &[usize], k: usize) -> Result<BitMatrix> {
    if k == 0 {
        return Err(precondition("sequence_to_matrix needs k >= 1"));
    }
    if let Some(w) = positions.windows(2).find(|w| w[0] >= w[1]) {
        return Err(precondition(format!(
            "positions must increase strictly, got {} then {}",
            w[0], w[1]
        )));
    }
    if let Some(&p) = positions.iter().find(|&&p| p >= k * k) {
        return Err(precondition(format!(
            "position {p} is outside a block sequence of length {}",
            k * k
        )));
    }
    BitMatrix::from_ones(k, k, positions.iter().map(|&p| (p % k, p / k)))
}
