//! `qfrac`: compute, enumerate and verify q-continued-fraction identities.
//!
//! Every subcommand prints canonical JSON (`--format json`, the default) or a
//! human-readable rendering of the same data (`--format text`).  Exit codes:
//! 0 on success, 1 when a check fails or a computation signals a violation,
//! 2 on a usage error.

mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qfrac::Error;

/// Exact computation and verification of q-continued-fraction identities.
#[derive(Parser, Debug)]
#[command(name = "qfrac", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Maximum number of objects a single enumeration may visit.
    #[arg(long, default_value_t = qfrac::paths::DEFAULT_SIZE_LIMIT, global = true)]
    pub limit: u64,
    /// Seed for sampled property checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Granularity `g` of `q`-exponents in JSON output (exponents are in units of `1/g`).
    #[arg(long, global = true)]
    pub granularity: Option<u32>,
    /// Report wall-clock time (omitted by default so output is reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

/// Output format.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// Canonical JSON.
    Json,
    /// Human-readable text.
    Text,
}

/// Subcommands.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coefficient of `z^n` in a named continued fraction, or its closed form.
    Compute(commands::ComputeArgs),
    /// Run a verification suite.
    Verify(commands::VerifyArgs),
    /// Count and list configurations, overpartitions or lattice paths.
    Enumerate(commands::EnumerateArgs),
    /// Apply a bijection or involution to one object.
    Bijection(commands::BijectionArgs),
    /// Residual of a functional equation.
    Funeq(commands::FuneqArgs),
    /// Möbius matrices and Hankel determinants.
    Matrix(commands::MatrixArgs),
}

/// What a subcommand produced.
pub struct Output {
    /// Machine-readable form.
    pub json: serde_json::Value,
    /// Human-readable form.
    pub text: String,
    /// False when a check failed.
    pub ok: bool,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Domain(_) | Error::Granularity(..) | Error::SizeLimit(_) => 2,
        _ => 1,
    }
}

/// Prints a line, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = commands::run(&cli.command, &cli.global);
    match result {
        Ok(mut out) => {
            let elapsed = start.elapsed().as_millis() as u64;
            match cli.global.format {
                Format::Json => {
                    if cli.global.timing {
                        if let Some(obj) = out.json.as_object_mut() {
                            obj.insert("elapsed_ms".into(), elapsed.into());
                        }
                    }
                    emit(&serde_json::to_string_pretty(&out.json).expect("serialisable"));
                }
                Format::Text => {
                    emit(&out.text);
                    if cli.global.timing {
                        emit(&format!("elapsed: {elapsed} ms"));
                    }
                }
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
