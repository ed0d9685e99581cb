//! Acceptance suite: one PASS/FAIL line per criterion. Exact values are
//! checked against brute-force oracles written here, independent of the
//! library's search code.

use std::process::ExitCode;
use std::time::Instant;

use extremal_cli::report::{report, Format};
use extremal_cli::sweep::{fit_power_law, sweep_sm_allones, sweep_ss_block, trial_rng};
use extremal_core::constructions::{
    all_ones, block_sequence, column, corner_join, diagonal, insert_column, l_shape,
    monotone_chain_obstructions, pattern_from_sequence, row,
};
use extremal_core::envelope::{
    lower_envelope, realizable_extract, realize_lines, verify_envelope, Polynomial,
};
use extremal_core::extractors::{
    dichotomy_extract, erdos_szekeres_extract, probabilistic_extract, sequence_to_matrix,
};
use extremal_core::matrix::mat_contains;
use extremal_core::sequence::{alternation, seq_contains};
use extremal_core::solvers::{
    ex_exact, lsm_exact, lsp_upper, lss_exact, sm_oracle, ss_oracle, RestrictedGrowth,
    DEFAULT_NODE_BUDGET,
};
use extremal_core::{ceil_sqrt, BitMatrix, Sequence};
use rand::seq::index::sample;
use rand::Rng;

const B: u64 = DEFAULT_NODE_BUDGET;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn seq(text: &str) -> Sequence {
    Sequence::from_tokens(text.chars())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core_err(e: extremal_core::Error) -> String {
    e.to_string()
}

/// All strictly increasing `len`-subsets of `0..n`.
fn subsets(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, len: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, len, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, len, 0, &mut Vec::new(), &mut out);
    out
}

/// Sequence containment by trying every position subset.
fn brute_seq_contains(u: &Sequence, v: &Sequence) -> bool {
    subsets(u.len(), v.len())
        .iter()
        .any(|pos| u.subsequence(pos).is_isomorphic(v))
}

/// Matrix containment by trying every row and column subset.
fn brute_mat_contains(a: &BitMatrix, p: &BitMatrix) -> bool {
    let cols = subsets(a.cols(), p.cols());
    subsets(a.rows(), p.rows()).iter().any(|rs| {
        cols.iter()
            .any(|cs| p.ones().iter().all(|&(i, j)| a.get(rs[i], cs[j])))
    })
}

/// No two rows share two columns.
fn free_of_square(a: &BitMatrix) -> bool {
    let grid: Vec<Vec<u8>> = a.to_rows();
    (0..a.rows()).all(|r1| {
        (r1 + 1..a.rows()).all(|r2| {
            (0..a.cols())
                .filter(|&c| grid[r1][c] == 1 && grid[r2][c] == 1)
                .count()
                < 2
        })
    })
}

/// Longest v-free subsequence by trying every subset, largest first.
fn brute_lss(u: &Sequence, v: &Sequence) -> usize {
    (0..=u.len())
        .rev()
        .find(|&len| {
            subsets(u.len(), len)
                .iter()
                .any(|pos| !brute_seq_contains(&u.subsequence(pos), v))
        })
        .unwrap()
}

fn block_sandwich() -> Check {
    let v = seq("abab");
    let mut seen = Vec::new();
    for k in 2..=5 {
        let u = block_sequence(k).map_err(core_err)?;
        let value = lss_exact(&u, &v, B).map_err(core_err)?.value;
        ensure(k <= value && value < 3 * k, || {
            format!("k={k}: {value} outside [{k}, {}]", 3 * k - 1)
        })?;
        seen.push(value);
    }
    // The smallest case is also settled by trying every subset.
    let brute = brute_lss(&block_sequence(2).unwrap(), &v);
    ensure(brute == seen[0], || {
        format!("k=2: solver {} vs brute force {brute}", seen[0])
    })?;
    Ok(format!("values for k=2..5: {seen:?}"))
}

fn trivial_values() -> Check {
    let mut checked = 0;
    for k in 2..=3usize {
        let repeated = Sequence::new(vec![0; k]);
        let distinct = Sequence::new((0..k as u32).collect());
        for m in 1..=8 {
            // A sequence shorter than k - 1 is trivially free.
            let want = m.min(k - 1);
            for v in [&repeated, &distinct] {
                let got = ss_oracle(m, v, 8, B).map_err(core_err)?.value;
                ensure(got == want, || {
                    format!("ss({m}, {v}) = {got}, expected {want}")
                })?;
                checked += 1;
            }
        }
        for m in 1..=5 {
            let want = m.min(k - 1);
            for (name, p) in [
                ("row", row(k)),
                ("column", column(k)),
                ("diagonal", diagonal(k)),
            ] {
                let p = p.map_err(core_err)?;
                let got = sm_oracle(m, &p, 5, B).map_err(core_err)?.value;
                ensure(got == want, || {
                    format!("sm({m}, {name}({k})) = {got}, expected {want}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} oracle values equal min(m, k-1)"))
}

fn dichotomy_bound() -> Check {
    let patterns = [seq("aba"), seq("abab")];
    let mut instances = 0u64;
    for m in 1..=9 {
        let need = ceil_sqrt(m);
        let mut rgs = RestrictedGrowth::new(m);
        loop {
            let u = Sequence::new(rgs.current().to_vec());
            let rep = dichotomy_extract(&u).map_err(core_err)?;
            let kept = u.subsequence(&rep.witness);
            for v in &patterns {
                let value = lss_exact(&u, v, B).map_err(core_err)?.value;
                ensure(value >= need, || {
                    format!("lss({u}, {v}) = {value} < {need}")
                })?;
                ensure(rep.size >= need && seq_contains(&kept, v).is_none(), || {
                    format!("dichotomy witness {kept} of {u} fails against {v}")
                })?;
            }
            instances += 1;
            if !rgs.advance() {
                break;
            }
        }
    }
    Ok(format!("{instances} normalized sequences with m <= 9"))
}

fn probabilistic_extractor() -> Check {
    const SEEDS: u64 = 500;
    let p = all_ones(2, 2).unwrap();
    let mut points = Vec::new();
    let mut summary = Vec::new();
    for side in [8usize, 16, 32] {
        let host = all_ones(side, side).unwrap();
        let m = host.count_ones();
        let mut total = 0usize;
        for trial in 0..SEEDS {
            let mut rng = trial_rng(0, m as u64, trial);
            let rep = probabilistic_extract(&host, &p, &mut rng).map_err(core_err)?;
            ensure(
                free_of_square(&rep.witness) && rep.witness.is_submatrix_of(&host),
                || format!("m={m} trial {trial}: output contains the pattern"),
            )?;
            total += rep.size;
        }
        let mean = total as f64 / SEEDS as f64;
        let bound = 7.0 / 16.0 * (m as f64).powf(2.0 / 3.0);
        ensure(mean >= 0.9 * bound, || {
            format!("m={m}: mean {mean:.2} < 0.9 * {bound:.2}")
        })?;
        points.push((m as f64, mean));
        summary.push(format!("m={m} mean={mean:.2} (bound {bound:.2})"));
    }
    let fit = fit_power_law(&points).map_err(|e| e.to_string())?;
    ensure((0.56..=0.76).contains(&fit.exponent), || {
        format!("fitted exponent {:.4}", fit.exponent)
    })?;
    Ok(format!(
        "{}; exponent {:.4}",
        summary.join(", "),
        fit.exponent
    ))
}

fn random_matrix<R: Rng>(rng: &mut R, m: usize) -> BitMatrix {
    let side = 2 * ceil_sqrt(m);
    let cells = sample(rng, side * side, m);
    BitMatrix::from_ones(side, side, cells.iter().map(|i| (i / side, i % side))).unwrap()
}

fn erdos_szekeres() -> Check {
    let obstructions = monotone_chain_obstructions();
    let mut smallest = Vec::new();
    for m in [25usize, 100, 400] {
        let mut min_size = usize::MAX;
        for trial in 0..100 {
            let mut rng = trial_rng(1, m as u64, trial);
            let a = random_matrix(&mut rng, m);
            let rep = erdos_szekeres_extract(&a).map_err(core_err)?;
            ensure(
                rep.size >= ceil_sqrt(m) && rep.witness.is_submatrix_of(&a),
                || format!("m={m} trial {trial}: size {}", rep.size),
            )?;
            for (i, p) in obstructions.iter().enumerate() {
                ensure(mat_contains(&rep.witness, p).is_none(), || {
                    format!("m={m} trial {trial}: witness contains obstruction {i}")
                })?;
                if m == 25 {
                    ensure(!brute_mat_contains(&rep.witness, p), || {
                        format!("m=25 trial {trial}: brute force finds {i}")
                    })?;
                }
            }
            min_size = min_size.min(rep.size);
        }
        smallest.push(format!("m={m} min size {min_size} (need {})", ceil_sqrt(m)));
    }
    Ok(smallest.join(", "))
}

fn ex_bridge() -> Check {
    let patterns = [
        ("2x2 all-ones", all_ones(2, 2).unwrap()),
        ("L-shape", l_shape()),
        (
            "[[0,1],[1,1]]",
            BitMatrix::from_rows(&[[0u8, 1], [1, 1]]).unwrap(),
        ),
    ];
    let mut values = Vec::new();
    for n in 2..=3 {
        for (name, p) in &patterns {
            let lsm = lsm_exact(&all_ones(n, n).unwrap(), p, B)
                .map_err(core_err)?
                .value;
            let ex = ex_exact(n, p, B).map_err(core_err)?.value;
            ensure(lsm == ex, || format!("n={n} {name}: lsm {lsm} vs ex {ex}"))?;
            values.push(format!("ex({n},{name})={ex}"));
        }
    }
    let square = all_ones(2, 2).unwrap();
    let brute = (0u32..1 << 9)
        .map(|mask| {
            BitMatrix::from_ones(
                3,
                3,
                (0..9)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| (i / 3, i % 3)),
            )
            .unwrap()
        })
        .filter(|a| !brute_mat_contains(a, &square))
        .map(|a| a.count_ones())
        .max()
        .unwrap();
    let ex = ex_exact(3, &square, B).map_err(core_err)?.value;
    ensure(brute == 6 && ex == 6, || {
        format!("ex(3, 2x2) = {ex}, enumeration {brute}")
    })?;
    Ok(format!("{}; enumeration of 2^9 agrees", values.join(" ")))
}

fn operation_lemmas() -> Check {
    let p = all_ones(2, 2).unwrap();
    let derived = [
        ("insert_column", insert_column(&p, 0, 0).map_err(core_err)?),
        ("corner_join", corner_join(&p, 2).map_err(core_err)?),
    ];
    let mut rows = Vec::new();
    for m in 1..=4 {
        let base = sm_oracle(m, &p, 4, B).map_err(core_err)?.value;
        for (name, r) in &derived {
            let v = sm_oracle(m, r, 4, B).map_err(core_err)?.value;
            ensure(base <= v && v <= 2 * base, || {
                format!("m={m} {name}: {v} outside [{base}, {}]", 2 * base)
            })?;
            rows.push(format!("m={m} {name} {base}<={v}"));
        }
    }
    Ok(rows.join(", "))
}

fn random_family<R: Rng>(rng: &mut R, k: usize) -> Vec<Polynomial> {
    let n = rng.gen_range(1..=6);
    (0..n)
        .map(|_| Polynomial::new((0..=k).map(|_| rng.gen_range(-1.0..=1.0)).collect()))
        .collect()
}

fn envelope_alternation() -> Check {
    let mut samples = 0usize;
    for k in 1..=4usize {
        let forbidden = alternation(k + 2);
        for trial in 0..200 {
            let mut rng = trial_rng(2, k as u64, trial);
            let polys = random_family(&mut rng, k);
            let env =
                lower_envelope(&polys, 1e-9).map_err(|e| format!("k={k} trial {trial}: {e}"))?;
            let s = env.sequence();
            ensure(
                seq_contains(&s, &forbidden).is_none() && !brute_seq_contains(&s, &forbidden),
                || {
                    format!(
                        "k={k} trial {trial}: envelope {s} contains an alternation of length {}",
                        k + 2
                    )
                },
            )?;
            let finite: Vec<f64> = env.breakpoints();
            let (lo, hi) = match (finite.first(), finite.last()) {
                (Some(&a), Some(&b)) => (a, b),
                _ => (0.0, 0.0),
            };
            let reach = (hi - lo).max(1.0);
            for piece in &env.pieces {
                let a = if piece.start.is_finite() {
                    piece.start
                } else {
                    lo - reach
                };
                let b = if piece.end.is_finite() {
                    piece.end
                } else {
                    hi + reach
                };
                for j in 0..100 {
                    let x = a + (b - a) * (j as f64 + 0.5) / 100.0;
                    let min = polys
                        .iter()
                        .map(|p| p.eval(x))
                        .fold(f64::INFINITY, f64::min);
                    let own = polys[piece.index].eval(x);
                    ensure(own - min <= 1e-6 * min.abs().max(1.0), || {
                        format!(
                            "k={k} trial {trial}: piece {} is {own} at x={x}, minimum {min}",
                            piece.index
                        )
                    })?;
                    samples += 1;
                }
            }
        }
    }
    Ok(format!("800 families, {samples} sample points"))
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, (n - 1) as u32);
            out.push(q);
        }
    }
    out
}

fn realization_round_trip() -> Check {
    let mut exact = 0;
    for n in 1..=7 {
        for letters in permutations(n) {
            let u = Sequence::new(letters);
            let polys = realize_lines(&u).map_err(core_err)?;
            ensure(verify_envelope(&polys, &u, 1e-9).map_err(core_err)?, || {
                format!("{u} not realized")
            })?;
            // Labels must follow u position by position, not just up to isomorphism.
            let labels = lower_envelope(&polys, 1e-9).map_err(core_err)?.labels();
            ensure(labels == (0..n).collect::<Vec<_>>(), || {
                format!("{u}: labels {labels:?}")
            })?;
            exact += 1;
        }
    }
    let mut rng = trial_rng(3, 0, 0);
    let (mut rainbow, mut repeated) = (0, 0);
    for _ in 0..100 {
        let len = rng.gen_range(1..=36usize);
        let alphabet = rng.gen_range(1..=len as u32);
        let u = Sequence::new((0..len).map(|_| rng.gen_range(0..alphabet)).collect());
        let k = 1;
        let r = realizable_extract(&u, k).map_err(core_err)?;
        let upper = lsp_upper(&u, k, B).map_err(core_err)?;
        let size = r.subsequence.len();
        ensure(ceil_sqrt(len) <= size && size <= upper, || {
            format!(
                "{u}: witness length {size} outside [{}, {upper}]",
                ceil_sqrt(len)
            )
        })?;
        ensure(r.polys.iter().all(|p| p.degree().unwrap_or(0) <= k), || {
            format!("{u}: degree above {k}")
        })?;
        ensure(
            verify_envelope(&r.polys, &r.subsequence, 1e-9).map_err(core_err)?,
            || format!("{u}: witness {} not realized", r.subsequence),
        )?;
        if r.polys.len() > 1 {
            rainbow += 1;
        } else {
            repeated += 1;
        }
    }
    Ok(format!(
        "{exact} distinct-letter sequences; 100 random ({rainbow} rainbow, {repeated} repeated)"
    ))
}

fn reduction_implication() -> Check {
    let mut implications = 0;
    for k in 1..=3 {
        let u = block_sequence(k).unwrap();
        let n = k * k;
        for v in ["aba", "abab", "aab"] {
            let v = seq(v);
            let p = pattern_from_sequence(&v).map_err(core_err)?;
            for mask in 0u32..1 << n {
                let pos: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let a = sequence_to_matrix(&pos, k).map_err(core_err)?;
                let s = u.subsequence(&pos);
                let in_matrix = mat_contains(&a, &p).is_some();
                ensure(in_matrix == brute_mat_contains(&a, &p), || {
                    format!("matrix containment disagrees on {pos:?}")
                })?;
                if in_matrix {
                    ensure(
                        seq_contains(&s, &v).is_some() && brute_seq_contains(&s, &v),
                        || {
                            format!("k={k} positions {pos:?}: matrix contains the pattern of {v} but {s} does not")
                        },
                    )?;
                    implications += 1;
                }
            }
        }
    }
    Ok(format!("{implications} positive cases, all implied"))
}

fn determinism() -> Check {
    let run = || -> Result<Vec<String>, String> {
        let ss = sweep_ss_block(1, 4, B, 0, false).map_err(|e| e.to_string())?;
        let sm = sweep_sm_allones(2, &[64, 512, 4096], 50, 11, false).map_err(|e| e.to_string())?;
        let mut out = Vec::new();
        for f in [Format::Json, Format::Csv, Format::Svg] {
            out.push(report(&ss, f, &[0.5]).map_err(|e| e.to_string())?);
            out.push(report(&sm.records, f, &[2.0 / 3.0]).map_err(|e| e.to_string())?);
        }
        Ok(out)
    };
    let (first, second) = (run()?, run()?);
    ensure(first == second, || {
        "sweep outputs differ between runs".into()
    })?;
    Ok(format!("{} outputs byte-identical", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("block-sequence sandwich", block_sandwich),
        ("trivial exact values", trivial_values),
        ("dichotomy lower bound", dichotomy_bound),
        ("probabilistic extractor", probabilistic_extractor),
        ("Erdos-Szekeres extractor", erdos_szekeres),
        ("ex / lsm bridge", ex_bridge),
        ("operation lemmas", operation_lemmas),
        ("envelope alternation bound", envelope_alternation),
        ("realization round-trip", realization_round_trip),
        ("sequence-to-matrix reduction", reduction_implication),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{secs:.1}s]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{secs:.1}s]: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
