//! Command-line surface. [`run`] returns the text destined for stdout or
//! `--out`, so every command can be exercised without a subprocess.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use extremal_core::constructions::{
    all_ones, block_sequence, corner_join, diagonal, insert_column, pattern_from_sequence,
    upper_construction_allones,
};
use extremal_core::envelope::lower_envelope;
use extremal_core::extractors::{
    alternate_thinning, dichotomy_extract, erdos_szekeres_extract, probabilistic_extract,
    ExtractReport,
};
use extremal_core::solvers::{ex_exact, lsm_exact, lsp_upper, lss_exact, sm_oracle, ss_oracle};
use extremal_core::{envelope, BitMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::{Overrides, Settings};
use crate::error::CliError;
use crate::formats::{
    letter_token, matrix_lines, parse_matrix, parse_pattern, parse_polynomials, parse_sequence,
    write_matrix, write_polynomials, write_sequence,
};
use crate::report::{parse_records, report, Format};
use crate::sweep::{fit_exponent, sweep_sm_allones, sweep_ss_block};

#[derive(Debug, Parser)]
#[command(
    name = "extremal",
    version,
    about = "Exact and constructive extremal functions for forbidden patterns"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Numeric tolerance for envelope computations.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Search-node budget for exact solvers.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Output format for sweeps: json, csv or svg.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// File of key=value settings; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Record wall-clock times in sweep records.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Longest subsequence of a sequence file avoiding a pattern.
    Lss {
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        pattern: String,
    },
    /// Largest submatrix of a matrix file avoiding a pattern file.
    Lsm {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Most ones in an n x n matrix avoiding a pattern file.
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Minimum of lss over all sequences of length m.
    SsOracle {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        pattern: String,
        /// Largest m allowed.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Minimum of lsm over all matrices with m ones.
    SmOracle {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        pattern: PathBuf,
        /// Largest m allowed.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Build a sequence or matrix.
    #[command(subcommand)]
    Construct(Construct),
    /// Run a constructive extractor.
    #[command(subcommand)]
    Extract(Extract),
    /// Lower envelope of a polynomial-set file.
    Envelope {
        #[arg(long)]
        polys: PathBuf,
    },
    /// Lines whose lower envelope spells a sequence of distinct letters.
    Realize {
        #[arg(long)]
        seq: String,
    },
    /// Upper bound on the longest subsequence realizable in degree k.
    LspUpper {
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Growth-rate experiments.
    #[command(subcommand)]
    Sweep(Sweep),
    /// Fit a power law to a record file (json or csv).
    Fit {
        #[arg(long)]
        records: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// (a_1 ... a_k)^k as a sequence file.
    Block {
        #[arg(long)]
        k: usize,
    },
    /// r x c all-ones matrix.
    AllOnes {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        c: usize,
    },
    /// Dense all-ones-free host with about m ones.
    #[command(name = "lemma3")]
    DenseHost {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
    },
    /// Matrix pattern of a sequence: one one per column, row = letter.
    PatternFromSeq {
        #[arg(long)]
        seq: String,
    },
    /// k x k identity.
    Diagonal {
        #[arg(long)]
        k: usize,
    },
    /// Insert a column between two adjacent ones of a pattern file.
    InsertColumn {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        row: usize,
        #[arg(long)]
        col: usize,
    },
    /// Join copies of a pattern file at opposite corners.
    CornerJoin {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, default_value_t = 2)]
        copies: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Extract {
    /// Random deletion against an all-ones or L-shaped pattern.
    Prob {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        /// Also write the witness as a matrix file.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Monotone chain of ones.
    Es {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// One repeated letter or one copy of every letter.
    Dichotomy {
        #[arg(long)]
        seq: PathBuf,
        /// Also write the kept subsequence as a sequence file.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Every other one in each row.
    Thin {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Sweep {
    /// Exact abab-free subsequences of block sequences.
    SsBlock {
        #[arg(long, default_value_t = 1)]
        k_min: usize,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
    },
    /// Probabilistic extraction on dense all-ones-free hosts.
    SmAllones {
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Requested sizes, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = [64usize, 512, 4096])]
        m: Vec<usize>,
        /// Trials per size (default from config, else 100).
        #[arg(long)]
        trials: Option<usize>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    Ok(std::fs::read_to_string(path)?)
}

fn millis(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn to_json(v: &Value) -> Result<String, CliError> {
    Ok(serde_json::to_string(v)? + "\n")
}

fn write_witness(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    if let Some(p) = path {
        std::fs::write(p, text)?;
    }
    Ok(())
}

fn matrix_report(rep: &ExtractReport<BitMatrix>, seed: u64, start: Instant) -> Value {
    let mut v = json!({
        "value": rep.size,
        "witness": matrix_lines(&rep.witness),
        "guarantee": rep.guarantee,
        "method": rep.method.as_str(),
        "seed": seed,
        "elapsed_ms": millis(start),
    });
    if let Some(b) = rep.expected_bound {
        v["expected_bound"] = json!(b);
    }
    v
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let g = &cli.global;
    let trials = match &cli.command {
        Command::Sweep(Sweep::SmAllones { trials, .. }) => *trials,
        _ => None,
    };
    let settings = Settings::load(
        g.config.as_deref(),
        &Overrides {
            seed: g.seed,
            tol: g.tol,
            budget: g.budget,
            trials,
            format: g.format.clone(),
            timing: g.timing,
        },
    )?;
    let budget = settings.budget;
    let start = Instant::now();
    match &cli.command {
        Command::Lss { seq, pattern } => {
            let u = parse_sequence(&read(seq)?)?;
            let r = lss_exact(&u, &parse_pattern(pattern), budget)?;
            to_json(
                &json!({"value": r.value, "witness": r.witness, "nodes": r.nodes, "elapsed_ms": millis(start)}),
            )
        }
        Command::Lsm { matrix, pattern } => {
            let a = parse_matrix(&read(matrix)?)?;
            let r = lsm_exact(&a, &parse_matrix(&read(pattern)?)?, budget)?;
            to_json(
                &json!({"value": r.value, "witness": matrix_lines(&r.witness), "nodes": r.nodes, "elapsed_ms": millis(start)}),
            )
        }
        Command::Ex { n, pattern } => {
            let r = ex_exact(*n, &parse_matrix(&read(pattern)?)?, budget)?;
            to_json(
                &json!({"value": r.value, "witness": matrix_lines(&r.witness), "nodes": r.nodes, "elapsed_ms": millis(start)}),
            )
        }
        Command::SsOracle { m, pattern, limit } => {
            let r = ss_oracle(
                *m,
                &parse_pattern(pattern),
                limit.unwrap_or(settings.ss_limit),
                budget,
            )?;
            let witness: Vec<String> = r
                .argmin
                .letters()
                .iter()
                .map(|&x| letter_token(x))
                .collect();
            to_json(&json!({
                "value": r.value, "witness": witness, "nodes": r.nodes,
                "instances": r.instances, "elapsed_ms": millis(start),
            }))
        }
        Command::SmOracle { m, pattern, limit } => {
            let p = parse_matrix(&read(pattern)?)?;
            let r = sm_oracle(*m, &p, limit.unwrap_or(settings.sm_limit), budget)?;
            to_json(&json!({
                "value": r.value, "witness": matrix_lines(&r.argmin), "nodes": r.nodes,
                "instances": r.instances, "elapsed_ms": millis(start),
            }))
        }
        Command::Construct(c) => construct(c),
        Command::Extract(e) => extract(e, &settings, start),
        Command::Envelope { polys } => {
            let ps = parse_polynomials(&read(polys)?)?;
            let env = lower_envelope(&ps, settings.tol)?;
            to_json(&json!({
                "sequence": env.sequence().letters(),
                "labels": env.labels(),
                "breakpoints": env.breakpoints(),
            }))
        }
        Command::Realize { seq } => Ok(write_polynomials(&envelope::realize_lines(
            &parse_pattern(seq),
        )?)),
        Command::LspUpper { seq, k } => {
            let u = parse_sequence(&read(seq)?)?;
            let value = lsp_upper(&u, *k, budget)?;
            to_json(&json!({"value": value, "k": k, "elapsed_ms": millis(start)}))
        }
        Command::Sweep(s) => {
            let format: Format = settings.format.parse()?;
            match s {
                Sweep::SsBlock { k_min, k_max } => {
                    let recs =
                        sweep_ss_block(*k_min, *k_max, budget, settings.seed, settings.timing)?;
                    report(&recs, format, &[0.5])
                }
                Sweep::SmAllones { r, m, .. } => {
                    let res =
                        sweep_sm_allones(*r, m, settings.trials, settings.seed, settings.timing)?;
                    if let Some(f) = res.fit {
                        eprintln!(
                            "fitted exponent {:.4} (r^2 = {:.4})",
                            f.exponent, f.r_squared
                        );
                    }
                    report(&res.records, format, &[*r as f64 / (*r as f64 + 1.0)])
                }
            }
        }
        Command::Fit { records } => {
            let f = fit_exponent(&parse_records(&read(records)?)?)?;
            Ok(serde_json::to_string(&f)? + "\n")
        }
    }
}

fn construct(c: &Construct) -> Result<String, CliError> {
    Ok(match c {
        Construct::Block { k } => write_sequence(&block_sequence(*k)?),
        Construct::AllOnes { r, c } => write_matrix(&all_ones(*r, *c)?),
        Construct::DenseHost { m, r } => write_matrix(&upper_construction_allones(*m, *r)?),
        Construct::PatternFromSeq { seq } => {
            write_matrix(&pattern_from_sequence(&parse_pattern(seq))?)
        }
        Construct::Diagonal { k } => write_matrix(&diagonal(*k)?),
        Construct::InsertColumn { pattern, row, col } => {
            write_matrix(&insert_column(&parse_matrix(&read(pattern)?)?, *row, *col)?)
        }
        Construct::CornerJoin { pattern, copies } => {
            write_matrix(&corner_join(&parse_matrix(&read(pattern)?)?, *copies)?)
        }
    })
}

fn extract(e: &Extract, settings: &Settings, start: Instant) -> Result<String, CliError> {
    let seed = settings.seed;
    match e {
        Extract::Prob {
            matrix,
            pattern,
            witness,
        } => {
            let a = parse_matrix(&read(matrix)?)?;
            let p = parse_matrix(&read(pattern)?)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rep = probabilistic_extract(&a, &p, &mut rng)?;
            write_witness(witness.as_ref(), &write_matrix(&rep.witness))?;
            to_json(&matrix_report(&rep, seed, start))
        }
        Extract::Es { matrix, witness } => {
            let rep = erdos_szekeres_extract(&parse_matrix(&read(matrix)?)?)?;
            write_witness(witness.as_ref(), &write_matrix(&rep.witness))?;
            to_json(&matrix_report(&rep, seed, start))
        }
        Extract::Thin { matrix, witness } => {
            let a = parse_matrix(&read(matrix)?)?;
            let t = alternate_thinning(&a);
            write_witness(witness.as_ref(), &write_matrix(&t))?;
            to_json(&json!({
                "value": t.count_ones(),
                "witness": matrix_lines(&t),
                "guarantee": a.count_ones().div_ceil(2),
                "method": extremal_core::extractors::Method::Thinning.as_str(),
                "seed": seed,
                "elapsed_ms": millis(start),
            }))
        }
        Extract::Dichotomy { seq, witness } => {
            let u = parse_sequence(&read(seq)?)?;
            let rep = dichotomy_extract(&u)?;
            let kept = u.subsequence(&rep.witness);
            write_witness(witness.as_ref(), &write_sequence(&kept))?;
            let tokens: Vec<String> = kept.letters().iter().map(|&x| letter_token(x)).collect();
            to_json(&json!({
                "value": rep.size,
                "witness": rep.witness,
                "subsequence": tokens,
                "guarantee": rep.guarantee,
                "method": rep.method.as_str(),
                "seed": seed,
                "elapsed_ms": millis(start),
            }))
        }
    }
}
