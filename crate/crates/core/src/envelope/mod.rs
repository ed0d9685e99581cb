//! Lower envelopes of polynomial families.
//!
//! The envelope `min(f_1, ..., f_n)` is described left to right as a list of
//! pieces, each naming the minimizing polynomial on an interval. Candidate
//! breakpoints are the sign-change roots of all pairwise differences; the
//! two unbounded pieces are labeled by comparing polynomials at infinity
//! (leading coefficient and degree parity), interior pieces by evaluating
//! at the midpoint. Adjacent pieces with the same label are merged, so a
//! tangential touch never produces a boundary.

mod polynomial;
pub mod roots;

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

pub use polynomial::Polynomial;

use crate::error::{precondition, Error, Result};
use crate::extractors::{dichotomy_extract, Method};
use crate::sequence::Sequence;

pub const DEFAULT_TOL: f64 = 1e-9;

/// One piece of an envelope: polynomial `index` is the minimum on
/// `(start, end)`. The first piece starts at `-inf`, the last ends at `+inf`.
#[derive(Clone, Debug, PartialEq)]
pub struct Piece {
    pub index: usize,
    pub start: f64,
    pub end: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Envelope {
    pub pieces: Vec<Piece>,
}

impl Envelope {
    /// Polynomial indices left to right.
    pub fn labels(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.index).collect()
    }

    pub fn breakpoints(&self) -> Vec<f64> {
        // Adding 0.0 turns a -0.0 root into 0.0.
        self.pieces.iter().skip(1).map(|p| p.start + 0.0).collect()
    }

    /// Label sequence, normalized.
    pub fn sequence(&self) -> Sequence {
        Sequence::new(self.pieces.iter().map(|p| p.index as u32).collect()).normalize()
    }
}

/// Orders `a` against `b` for all sufficiently large `|x|` on one side.
fn compare_at_infinity(a: &Polynomial, b: &Polynomial, toward_plus: bool) -> Ordering {
    match (a - b).sign_at_infinity(toward_plus) {
        s if s < 0 => Ordering::Less,
        s if s > 0 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

fn argmin_at_infinity(polys: &[Polynomial], toward_plus: bool) -> usize {
    (0..polys.len())
        .min_by(|&i, &j| compare_at_infinity(&polys[i], &polys[j], toward_plus).then(i.cmp(&j)))
        .expect("nonempty family")
}

fn argmin_at(polys: &[Polynomial], x: f64, tol: f64) -> Result<usize> {
    let mut best = (f64::INFINITY, usize::MAX);
    let mut second = f64::INFINITY;
    for (i, p) in polys.iter().enumerate() {
        let v = p.eval(x);
        if v < best.0 {
            second = best.0;
            best = (v, i);
        } else if v < second {
            second = v;
        }
    }
    if second - best.0 < tol {
        return Err(Error::Tolerance(format!(
            "two polynomials within {tol} of the minimum at x = {x}"
        )));
    }
    Ok(best.1)
}

/// Computes the lower envelope of `polys`.
///
/// Fails with [`Error::Degenerate`] when two polynomials are identical and
/// with [`Error::Tolerance`] when two candidates are closer than `tol` at a
/// sample point.
pub fn lower_envelope(polys: &[Polynomial], tol: f64) -> Result<Envelope> {
    if polys.is_empty() {
        return Err(precondition("lower_envelope needs at least one polynomial"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(precondition("tolerance must be positive"));
    }
    let mut cuts = Vec::new();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let diff = &polys[i] - &polys[j];
            if diff.is_zero() {
                return Err(Error::Degenerate(format!(
                    "polynomials {i} and {j} are identical"
                )));
            }
            cuts.extend(roots::sign_change_roots(&diff, tol));
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|b, a| *b - *a <= tol);

    let mut pieces: Vec<Piece> = Vec::with_capacity(cuts.len() + 1);
    let mut push = |index: usize, start: f64, end: f64| match pieces.last_mut() {
        Some(last) if last.index == index => last.end = end,
        _ => pieces.push(Piece { index, start, end }),
    };
    let first_end = cuts.first().copied().unwrap_or(f64::INFINITY);
    push(
        argmin_at_infinity(polys, false),
        f64::NEG_INFINITY,
        first_end,
    );
    for w in cuts.windows(2) {
        let mid = w[0] + (w[1] - w[0]) / 2.0;
        push(argmin_at(polys, mid, tol)?, w[0], w[1]);
    }
    if let Some(&last) = cuts.last() {
        push(argmin_at_infinity(polys, true), last, f64::INFINITY);
    }
    Ok(Envelope { pieces })
}

/// The normalized left-to-right label sequence of the envelope.
pub fn envelope_sequence(polys: &[Polynomial], tol: f64) -> Result<Sequence> {
    Ok(lower_envelope(polys, tol)?.sequence())
}

/// Lines realizing a sequence of distinct letters: the `i`-th line has
/// slope `n - 1 - i`, and consecutive lines cross at `x = 0, 1, ..., n - 2`.
/// Slopes decrease and crossings move right, so every line owns one piece,
/// in order.
pub fn realize_lines(u: &Sequence) -> Result<Vec<Polynomial>> {
    let n = u.len();
    if n == 0 {
        return Err(precondition("realize_lines needs a nonempty sequence"));
    }
    if u.distinct_count() != n {
        return Err(precondition(
            "realize_lines needs pairwise distinct letters",
        ));
    }
    // Crossing of lines i and i+1 at x = i forces b_{i+1} = b_i + i.
    let mut intercept = 0.0;
    let mut lines = Vec::with_capacity(n);
    for i in 0..n {
        lines.push(Polynomial::line((n - 1 - i) as f64, intercept));
        intercept += i as f64;
    }
    Ok(lines)
}

/// A subsequence of the input together with polynomials realizing it.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    pub positions: Vec<usize>,
    pub subsequence: Sequence,
    pub polys: Vec<Polynomial>,
    pub method: Method,
}

/// Extracts a subsequence of length at least `ceil(sqrt(m))` realizable by
/// polynomials of degree at most `k`.
///
/// Distinct letters are realized by [`realize_lines`]. A run of one letter
/// is realized by a single constant whose one piece is read as several
/// consecutive pieces carrying the same label.
pub fn realizable_extract(u: &Sequence, k: usize) -> Result<Realization> {
    if k == 0 {
        return Err(precondition("realizable_extract needs degree k >= 1"));
    }
    let report = dichotomy_extract(u)?;
    let subsequence = u.subsequence(&report.witness);
    let polys = match report.method {
        Method::DichotomyRainbow => realize_lines(&subsequence)?,
        _ => alloc::vec![Polynomial::constant(0.0)],
    };
    Ok(Realization {
        positions: report.witness,
        subsequence,
        polys,
        method: report.method,
    })
}

/// True iff the envelope of `polys` is isomorphic to `target` once runs of
/// equal adjacent letters in `target` are collapsed.
pub fn verify_envelope(polys: &[Polynomial], target: &Sequence, tol: f64) -> Result<bool> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(precondition("tolerance must be positive"));
    }
    let env = envelope_sequence(polys, tol)?;
    Ok(env.is_isomorphic(&target.collapse_runs()))
}
