//! Real root isolation by derivative splitting and bisection.
//!
//! Between consecutive sign-change roots of `p'` the polynomial is monotone,
//! so each such interval holds at most one root and bisection on a sign
//! change finds it. Only roots where `p` changes sign are reported; roots of
//! even multiplicity (tangential touches) are skipped.

use alloc::vec;
use alloc::vec::Vec;

use super::Polynomial;

const MAX_BISECTIONS: usize = 400;

/// Sorted real roots of `p` at which `p` changes sign, each refined to an
/// interval of width at most `tol`.
pub fn sign_change_roots(p: &Polynomial, tol: f64) -> Vec<f64> {
    match p.degree() {
        None | Some(0) => Vec::new(),
        Some(1) => vec![-p.coeffs()[0] / p.coeffs()[1]],
        Some(_) => {
            let crit = sign_change_roots(&p.derivative(), tol);
            let reach = crit
                .iter()
                .fold(p.cauchy_bound(), |b, &c| b.max(c.abs() + 1.0));
            let mut knots = Vec::with_capacity(crit.len() + 2);
            knots.push(-reach);
            knots.extend(crit.iter().copied());
            knots.push(reach);
            let values: Vec<f64> = knots.iter().map(|&x| p.eval(x)).collect();
            let mut roots = Vec::new();
            for w in 0..knots.len() - 1 {
                let (a, b) = (values[w], values[w + 1]);
                if a * b < 0.0 {
                    roots.push(bisect(p, knots[w], knots[w + 1], a < 0.0, tol));
                } else if b == 0.0 && w + 2 < knots.len() {
                    // Exact zero at an interior knot: a crossing iff the
                    // neighbours disagree in sign.
                    let c = values[w + 2];
                    if a * c < 0.0 {
                        roots.push(knots[w + 1]);
                    }
                }
            }
            roots
        }
    }
}

fn bisect(p: &Polynomial, mut lo: f64, mut hi: f64, negative_at_lo: bool, tol: f64) -> f64 {
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= tol {
            break;
        }
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        let v = p.eval(mid);
        if v == 0.0 {
            return mid;
        }
        if (v < 0.0) == negative_at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo + (hi - lo) / 2.0
}
