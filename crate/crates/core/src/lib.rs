//! Extremal functions for forbidden patterns in sequences and 0-1 matrices,
//! plus lower envelopes of real polynomials.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; randomized extractors take the generator as an
//! argument so callers decide how seeds are derived.
//!
//! * [`sequence`] and [`matrix`]: data types, isomorphism and containment.
//! * [`solvers`]: exact LSS / LSM / ex and brute-force ss / sm oracles.
//! * [`constructions`]: the extremal instances and patterns.
//! * [`extractors`]: constructive procedures that return large avoiding
//!   sub-objects together with their guaranteed size.
//! * [`envelope`]: polynomials, root isolation, lower envelopes and line
//!   realizations.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod constructions;
pub mod envelope;
mod error;
pub mod extractors;
pub mod matrix;
pub mod sequence;
pub mod solvers;

pub use error::{Error, Result};
pub use matrix::{BitMatrix, MatOccurrence};
pub use sequence::{SeqOccurrence, Sequence};

/// Smallest integer `t` with `t * t >= n`.
pub fn ceil_sqrt(n: usize) -> usize {
    let r = floor_root(n as u128, 2) as usize;
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// Largest integer `t` with `t^k <= n`. `k` must be at least 1.
pub fn floor_root(n: u128, k: u32) -> u128 {
    assert!(k >= 1, "root index must be positive");
    if n < 2 || k == 1 {
        return n;
    }
    let fits = |t: u128| -> bool {
        let mut acc: u128 = 1;
        for _ in 0..k {
            match acc.checked_mul(t) {
                Some(v) if v <= n => acc = v,
                _ => return false,
            }
        }
        true
    };
    // Binary search on [0, n]; the upper bound is refined by bit length.
    let bits = 128 - n.leading_zeros();
    let mut hi: u128 = 1u128 << (bits / k + 1).min(127);
    let mut lo: u128 = 0;
    if hi > n {
        hi = n;
    }
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}
