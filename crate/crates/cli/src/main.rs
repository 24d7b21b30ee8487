//! `traced`: run the property suites, evaluate `.diag` programs, or print the
//! partition-function table for a one-dimensional field theory.

mod demo;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use traced_core::check::{self, Config, Report};

#[derive(Parser)]
#[command(name = "traced", version, about = "Exact categorical traces and their verification harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run seeded property suites; exits nonzero iff a suite fails.
    Check {
        /// Suite id, dotted prefix (`slide`), glob (`slide.*`) or `all`. Repeatable.
        #[arg(long = "suite", value_delimiter = ',', default_value = "all")]
        suites: Vec<String>,
        #[arg(long, env = "TRACED_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: i64,
        /// Braiding parameter of the graded instance.
        #[arg(long, default_value = "2")]
        q: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Re-run the counterexamples recorded in a JSON report.
        #[arg(long, value_name = "FILE")]
        replay: Option<PathBuf>,
        /// Include per-suite wall time (makes reports differ run to run).
        #[arg(long)]
        timings: bool,
        /// List the registered suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate a `.diag` program; exits 0 iff every assertion holds, 2 on errors.
    Eval { file: PathBuf },
    /// Small worked demonstrations.
    Demo {
        #[command(subcommand)]
        demo: Demo,
    },
}

#[derive(Subcommand)]
enum Demo {
    /// Compare `E(closed)` with the trace pairing of the two halves for every
    /// split of a circle of the given length.
    Partition {
        /// Whitespace or comma separated rows of rationals.
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        #[arg(long)]
        length: String,
        /// Treat the matrix as a generator `H` with `E(interval L) = exp(-L H)`
        /// and compare in floating point; any positive real length is allowed.
        #[arg(long)]
        float: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Check { suites, seed, trials, max_dim, max_degree, q, format, replay, timings, list } => {
            if list {
                for s in check::registry() {
                    let control = if s.expect_counterexample { "  (control)" } else { "" };
                    println!("{:<32} {:<10} {}{control}", s.id, s.instance, s.tags.join(","));
                }
                return Ok(true);
            }
            if let Some(path) = replay {
                return run_replay(&path, format);
            }
            let suites = if suites.iter().any(|s| s == "all") { Vec::new() } else { suites };
            let config = Config { seed, trials, max_dim, max_degree, q, suites };
            let report = check::run(&config, timings)?;
            match format {
                Format::Text => print!("{}", check::render_text(&report)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
            Ok(report.passed)
        }
        Command::Eval { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            match traced_core::dsl::run_source(&text) {
                Ok(outcome) => {
                    print!("{}", outcome.transcript());
                    Ok(outcome.all_passed())
                }
                Err(e) => Err(anyhow::anyhow!("{}:{e}", file.display())),
            }
        }
        Command::Demo { demo: Demo::Partition { matrix, length, float } } => {
            let text = fs::read_to_string(&matrix).with_context(|| format!("reading {}", matrix.display()))?;
            if float {
                demo::partition_float(&text, &length)
            } else {
                demo::partition_exact(&text, &length)
            }
        }
    }
}

fn run_replay(path: &PathBuf, format: Format) -> Result<bool> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let report: Report = serde_json::from_str(&text).context("parsing report")?;
    let replays = check::replay(&report)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&replays)?),
        Format::Text => {
            for r in &replays {
                let verdict = if r.reproduced { "REPRODUCED" } else { "NOT REPRODUCED" };
                println!("{verdict} {} trial {}: {}", r.suite, r.trial, r.detail);
            }
            println!("{} recorded counterexamples replayed", replays.len());
        }
    }
    Ok(replays.iter().all(|r| r.reproduced))
}
