//! `chk`: decompose, count, render and verify gates of the single-qudit
//! Clifford hierarchy.
//!
//! Exit codes: 0 success, 1 invariant failure, 2 input error, 3 the gate is
//! not in the requested level.

mod commands;
mod expr;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use qudit_hierarchy::hierarchy::DEFAULT_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Decompose,
    Count,
    Support,
    Verify,
    Teleport,
    Enumerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "chk", version, about = "Exact checks on the single-qudit Clifford hierarchy")]
pub struct Args {
    /// Prime qudit dimension.
    #[arg(long, default_value_t = 3)]
    pub d: u32,
    /// Hierarchy level.
    #[arg(long, default_value_t = 3)]
    pub k: u32,
    #[arg(long, value_enum)]
    pub command: Command,
    /// Gate as a JSON matrix file.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "expr")]
    pub input: Option<PathBuf>,
    /// Gate as a word, e.g. "E H D[2; 1]^-1".
    #[arg(long)]
    pub expr: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest level size enumerated without --force.
    #[arg(long, env = "CHK_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Enumerate even above the budget.
    #[arg(long)]
    pub force: bool,
    /// Run sweeps on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut out = std::io::stdout().lock();
    match commands::run(&args, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("chk: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
