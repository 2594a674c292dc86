use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use monodromy_cli::checks::Suite;
use monodromy_cli::report::{report, validate_report_args, verify};
use monodromy_cli::{validate_verify_prime, DEFAULT_PRIME};
use monodromy_core::rootsys::Family;
use serde::Serialize;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "monodromy", version, about = "Verify root-system, adjoint-module and deformation-ledger computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite; exit 0 iff every check passes.
    Verify {
        #[arg(value_enum)]
        suite: Option<Suite>,
        #[arg(long = "suite", value_enum, conflicts_with = "suite")]
        suite_flag: Option<Suite>,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Summarize one type: decomposition, orbits, h0 tables, ledger slack.
    Report {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn emit<T: Serialize>(value: &T, path: Option<&PathBuf>) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, suite_flag, prime, seed, json } => {
            if let Err(e) = validate_verify_prime(prime) {
                return usage(&e);
            }
            let suite = suite.or(suite_flag).unwrap_or(Suite::All);
            let rep = match verify(suite, prime, seed) {
                Ok(r) => r,
                Err(e) => return usage(&e),
            };
            if let Err(e) = emit(&rep, json.as_ref()) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_FAIL);
            }
            if json.is_some() {
                println!("{} checks: {} passed, {} failed", rep.summary.total, rep.summary.passed, rep.summary.failed);
            }
            for c in rep.checks.iter().filter(|c| c.status == monodromy_cli::report::Status::Fail) {
                eprintln!("FAIL {}", c.check_id);
            }
            if rep.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Command::Report { family, rank, prime, seed, json } => {
            if let Err(e) = validate_report_args(family, rank, prime) {
                return usage(&e);
            }
            match report(family, rank, prime, seed).and_then(|r| emit(&r, json.as_ref())) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }
    }
}
