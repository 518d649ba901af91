use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use matgrowth::algebra::{mean_matrix, spectral_radius_exact, Mat2, Word};
use matgrowth::average::{
    average_growth_rate, empirical_mean_check, expected_entries, recurrence_spec,
};
use matgrowth::fastest::{
    jsr_estimate, max_entry_over_length, periodicity_probe, SearchLimits, DEFAULT_MAX_LEN,
};
use matgrowth::girth::{
    girth_bound, girth_report, verify_relation, BfsLimits, DEFAULT_DEPTH_MAX, DEFAULT_STATE_BUDGET,
};
use matgrowth::lyapunov::{
    bounds_report, lyapunov_mc, LyapunovConfig, MatrixNorm, DEFAULT_PRODUCT_LENGTH, DEFAULT_TRIALS,
};
use matgrowth::report::{
    emit_report, emit_value, run_summary, OutputFormat, PairSpec, SummaryConfig, REGISTRY,
};
use matgrowth::{Error, Result};

/// Growth rates of entries in products of two 2x2 matrices.
#[derive(Parser)]
#[command(name = "matgrowth", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    format: OutputFormat,
    /// Write to this file instead of standard output (overwritten).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for every random computation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads, 0 for one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

/// A registry name (a1b1, a2b2, a2bm2, pollicott, binary24, jurga_morris) or
/// two matrices as `a,b;c,d|a,b;c,d`.
#[derive(Args)]
struct PairArg {
    #[arg(long, value_parser = parse_pair)]
    pair: PairSpec,
}

#[derive(Args)]
struct McArgs {
    /// Factors per random product.
    #[arg(long, default_value_t = DEFAULT_PRODUCT_LENGTH)]
    n: usize,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, default_value = "l1", value_parser = parse_norm)]
    norm: MatrixNorm,
}

#[derive(Subcommand)]
enum Command {
    /// Lower and upper bounds on the fastest growth rate.
    Jsr {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
    /// Largest entry over all words of one length and the words attaining it.
    Maximizers {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long)]
        len: usize,
    },
    /// Looks for a word whose powers maximize at every multiple of its length.
    ProbePeriod {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
    /// Exact average growth and expected entries.
    Average {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Compare with a sampled mean, e.g. `trials=10000,seed=42`.
        #[arg(long, value_parser = parse_check)]
        check: Option<Check>,
    },
    /// Monte Carlo estimate of the Lyapunov exponent.
    Lyapunov {
        #[command(flatten)]
        pair: PairArg,
        #[command(flatten)]
        mc: McArgs,
    },
    /// Lyapunov estimate against its analytic upper bounds.
    Bounds {
        #[command(flatten)]
        pair: PairArg,
        #[command(flatten)]
        mc: McArgs,
    },
    /// Shortest relation among positive words modulo a prime.
    Girth {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_DEPTH_MAX)]
        depth_max: usize,
        /// Largest number of stored states.
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        budget: u64,
    },
    /// Exact check of a relation u(A,B) = v(A,B).
    Verify {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long)]
        u: Word,
        #[arg(long)]
        v: Word,
    },
    /// Word length at which entries of growth rate s first reach p.
    Bound {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: f64,
    },
    /// Fastest, average and generic growth side by side.
    Summary {
        /// Pairs to tabulate, repeatable; defaults to the whole registry.
        #[arg(long = "pair", value_parser = parse_pair)]
        pairs: Vec<PairSpec>,
        #[command(flatten)]
        mc: McArgs,
        #[arg(long, default_value_t = 12)]
        search_depth: usize,
    },
}

#[derive(Clone, Copy)]
struct Check {
    trials: usize,
    seed: Option<u64>,
}

fn parse_format(s: &str) -> Result<OutputFormat> {
    s.parse()
}

fn parse_pair(s: &str) -> Result<PairSpec> {
    PairSpec::parse(s)
}

fn parse_norm(s: &str) -> Result<MatrixNorm> {
    s.parse()
}

fn parse_check(s: &str) -> std::result::Result<Check, String> {
    let mut check = Check {
        trials: 10_000,
        seed: None,
    };
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or(format!("expected key=value, got '{part}'"))?;
        match key.trim() {
            "trials" => check.trials = value.trim().parse().map_err(|e| format!("trials: {e}"))?,
            "seed" => check.seed = Some(value.trim().parse().map_err(|e| format!("seed: {e}"))?),
            other => return Err(format!("unknown key '{other}'")),
        }
    }
    Ok(check)
}

fn tagged(pair: &PairSpec, body: impl Serialize) -> Result<Value> {
    let mut value = serde_json::to_value(body).map_err(|e| Error::Invariant(e.to_string()))?;
    if let Value::Object(map) = &mut value {
        map.insert("pair".into(), json!(pair.label()));
    }
    Ok(value)
}

fn mc_config(mc: &McArgs, seed: u64) -> LyapunovConfig {
    LyapunovConfig {
        n: mc.n,
        trials: mc.trials,
        seed,
        norm: mc.norm,
    }
}

fn commutes(a: &Mat2, b: &Mat2) -> bool {
    a * b == b * a
}

fn run(cli: Cli) -> Result<()> {
    let limits = SearchLimits {
        max_len: DEFAULT_MAX_LEN,
    };
    let (format, out) = (cli.format, cli.out.as_deref());
    let value = match cli.command {
        Command::Jsr {
            pair: PairArg { pair },
            max_len,
        } => tagged(&pair, jsr_estimate(&pair.a, &pair.b, max_len, &limits)?)?,
        Command::Maximizers {
            pair: PairArg { pair },
            len,
        } => tagged(
            &pair,
            max_entry_over_length(&pair.a, &pair.b, len, &limits)?,
        )?,
        Command::ProbePeriod {
            pair: PairArg { pair },
            max_len,
        } => tagged(
            &pair,
            periodicity_probe(&pair.a, &pair.b, max_len, &limits)?,
        )?,
        Command::Average {
            pair: PairArg { pair },
            n,
            check,
        } => {
            let (a, b) = (&pair.a, &pair.b);
            let check = match check {
                Some(c) => Some(empirical_mean_check(
                    a,
                    b,
                    n,
                    c.trials,
                    c.seed.unwrap_or(cli.seed),
                )?),
                None => None,
            };
            let exact = spectral_radius_exact(&mean_matrix(a, b));
            tagged(
                &pair,
                json!({
                    "mean_matrix": mean_matrix(a, b),
                    "s_ave": average_growth_rate(a, b),
                    "s_ave_exact": exact.map(|r| r.to_string()),
                    "recurrence": recurrence_spec(a, b),
                    "n": n,
                    "expected": expected_entries(a, b, n)?,
                    "check": check,
                }),
            )?
        }
        Command::Lyapunov {
            pair: PairArg { pair },
            mc,
        } => tagged(
            &pair,
            lyapunov_mc(&pair.a, &pair.b, &mc_config(&mc, cli.seed))?,
        )?,
        Command::Bounds {
            pair: PairArg { pair },
            mc,
        } => {
            let non_free = commutes(&pair.a, &pair.b);
            tagged(
                &pair,
                bounds_report(&pair.a, &pair.b, &mc_config(&mc, cli.seed), non_free)?,
            )?
        }
        Command::Girth {
            pair: PairArg { pair },
            p,
            depth_max,
            budget,
        } => {
            let bfs = BfsLimits {
                depth_max,
                state_budget: budget,
            };
            tagged(&pair, girth_report(&pair.a, &pair.b, p, &bfs, &limits)?)?
        }
        Command::Verify {
            pair: PairArg { pair },
            u,
            v,
        } => {
            let (a, b) = (&pair.a, &pair.b);
            tagged(
                &pair,
                json!({
                    "u": u,
                    "v": v,
                    "u_len": u.len(),
                    "v_len": v.len(),
                    "u_value": matgrowth::eval_word(&u, a, b),
                    "v_value": matgrowth::eval_word(&v, a, b),
                    "equal": verify_relation(&u, &v, a, b),
                }),
            )?
        }
        Command::Bound { p, s } => json!({ "p": p, "s": s, "girth_bound": girth_bound(p, s)? }),
        Command::Summary {
            pairs,
            mc,
            search_depth,
        } => {
            let pairs = if pairs.is_empty() {
                REGISTRY
                    .iter()
                    .map(|e| PairSpec::named(e.name))
                    .collect::<Result<_>>()?
            } else {
                pairs
            };
            let config = SummaryConfig {
                mc: mc_config(&mc, cli.seed),
                search_depth,
                limits,
            };
            let mut reports = Vec::new();
            let mut first_error = None;
            for row in run_summary(&pairs, &config) {
                match row.outcome {
                    Ok(r) => reports.push(r),
                    Err(e) => {
                        eprintln!("matgrowth: {}: {e}", row.pair);
                        first_error.get_or_insert(e);
                    }
                }
            }
            emit_report(&reports, format, out)?;
            return first_error.map_or(Ok(()), Err);
        }
    };
    emit_value(&value, format, out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
    {
        eprintln!("matgrowth: {e}");
        return ExitCode::from(3);
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("matgrowth: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
