//! Growth-rate experiments and power-law fits.

use std::time::Instant;

use extremal_core::constructions::{all_ones, block_sequence, upper_construction_allones};
use extremal_core::extractors::{probabilistic_extract, DeletionPlan};
use extremal_core::solvers::lss_exact;
use extremal_core::Sequence;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// One measured point of a sweep.
///
/// `elapsed_ms` is only filled when timing is requested, so that repeated
/// runs serialize identically by default.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub m: u64,
    pub k: u64,
    pub value: f64,
    pub lower_ref: Option<u64>,
    pub upper_ref: Option<u64>,
    pub seed: u64,
    pub elapsed_ms: Option<u64>,
}

impl SweepRecord {
    /// Fails when `value` leaves `[lower_ref, upper_ref]` and both are set.
    pub fn check(&self) -> Result<(), CliError> {
        if let (Some(lo), Some(hi)) = (self.lower_ref, self.upper_ref) {
            if !(lo as f64 <= self.value && self.value <= hi as f64) {
                return Err(CliError::BoundViolated(format!(
                    "m={} k={}: value {} outside [{lo}, {hi}]",
                    self.m, self.k, self.value
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub exponent: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SmSweep {
    pub records: Vec<SweepRecord>,
    /// Present when at least three sizes were measured.
    pub fit: Option<FitResult>,
}

/// Generator for one trial: the run seed picks the key, `instance`
/// separates independent instance families and `trial` picks the stream,
/// so adding trials never changes earlier ones.
pub fn trial_rng(seed: u64, instance: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ instance.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.set_stream(trial);
    rng
}

fn elapsed_ms(start: Instant, timing: bool) -> Option<u64> {
    timing.then(|| start.elapsed().as_millis() as u64)
}

fn sort_records(records: &mut [SweepRecord]) {
    records.sort_by_key(|a| (a.m, a.k));
}

/// Exact longest `abab`-free subsequence of the block sequence for each
/// `k` in `k_min..=k_max`, bracketed by `k` and `3k - 1`.
pub fn sweep_ss_block(
    k_min: usize,
    k_max: usize,
    budget: u64,
    seed: u64,
    timing: bool,
) -> Result<Vec<SweepRecord>, CliError> {
    if k_min == 0 || k_min > k_max {
        return Err(CliError::Parse(format!(
            "need 1 <= k_min <= k_max, got {k_min}..{k_max}"
        )));
    }
    let v = Sequence::new(vec![0, 1, 0, 1]);
    let mut records = Vec::new();
    for k in k_min..=k_max {
        let start = Instant::now();
        let u = block_sequence(k)?;
        let res = lss_exact(&u, &v, budget)?;
        let rec = SweepRecord {
            m: (k * k) as u64,
            k: k as u64,
            value: res.value as f64,
            lower_ref: Some(k as u64),
            upper_ref: Some(3 * k as u64 - 1),
            seed,
            elapsed_ms: elapsed_ms(start, timing),
        };
        rec.check()?;
        records.push(rec);
    }
    sort_records(&mut records);
    Ok(records)
}

/// Ceiling that ignores floating-point noise just above an integer.
fn noisy_ceil(x: f64) -> u64 {
    let x = x.max(0.0);
    (x - 1e-9 * x.max(1.0)).ceil().max(0.0) as u64
}

/// Mean size of the probabilistic extractor against the `r x r` all-ones
/// pattern, on the dense host built for each requested `m`.
///
/// Records carry the host's actual number of ones as `m`, and the
/// expectation bound at that `m` as `lower_ref`.
pub fn sweep_sm_allones(
    r: usize,
    m_list: &[usize],
    trials: usize,
    seed: u64,
    timing: bool,
) -> Result<SmSweep, CliError> {
    let p = all_ones(r, r)?;
    let plan = DeletionPlan::for_pattern(&p)?;
    let mut records = Vec::new();
    if trials > 0 {
        for &m in m_list {
            let start = Instant::now();
            let host = upper_construction_allones(m, r)?;
            let ones = host.count_ones();
            let mut total = 0usize;
            for t in 0..trials {
                let mut rng = trial_rng(seed, ones as u64, t as u64);
                total += probabilistic_extract(&host, &p, &mut rng)?.size;
            }
            let rec = SweepRecord {
                m: ones as u64,
                k: r as u64,
                value: total as f64 / trials as f64,
                lower_ref: Some(noisy_ceil(plan.expected_bound(ones))),
                upper_ref: None,
                seed,
                elapsed_ms: elapsed_ms(start, timing),
            };
            rec.check()?;
            records.push(rec);
        }
    }
    sort_records(&mut records);
    let fit = if records.len() >= 3 {
        Some(fit_exponent(&records)?)
    } else {
        None
    };
    Ok(SmSweep { records, fit })
}

/// Least-squares line through `(ln m, ln value)`.
pub fn fit_exponent(records: &[SweepRecord]) -> Result<FitResult, CliError> {
    let points: Vec<(f64, f64)> = records.iter().map(|r| (r.m as f64, r.value)).collect();
    fit_power_law(&points)
}

/// Fits `y = e^intercept * x^exponent` to positive points.
pub fn fit_power_law(points: &[(f64, f64)]) -> Result<FitResult, CliError> {
    if points.len() < 3 {
        return Err(CliError::InsufficientData(format!(
            "need at least 3 points, got {}",
            points.len()
        )));
    }
    if let Some(&(x, y)) = points.iter().find(|&&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(CliError::InsufficientData(format!(
            "non-positive point ({x}, {y})"
        )));
    }
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(CliError::InsufficientData("all sizes are equal".into()));
    }
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        (sxy * sxy) / (sxx * syy)
    };
    Ok(FitResult {
        exponent,
        intercept,
        r_squared,
    })
}
