//! `mws` — construct, analyze, enumerate, search and verify maximum weight
//! spectrum codes.
//!
//! Exit codes: 0 on success, 1 when a check fails (mismatched
//! distributions, a fruitless search, verify failures), 2 on usage or
//! input errors.

mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "mws", version, about = "Toolkit for maximum weight spectrum codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Binary [2^k-1, k, 1] full-weight-spectrum code
    Bk,
    /// Two-dimensional [q(q+1)/2, 2, q(q-1)/2] strictly compact code
    Dq,
    /// Hyperplane-index-sum multiset
    Hsum,
    /// Powers-of-two multiset of length 2^{q_k} - 1
    Pow2,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Gmat,
    Pmul,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exhaustive,
    Projective,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Randomized,
    Exhaustive,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build one of the known MWS families and report its spectrum
    Construct {
        family: Family,
        /// Field order as p or p^m (e.g. 3, 2^2)
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        /// File to write; the code is printed to stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format; defaults to gmat for bk/dq, pmul for hsum/pow2
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        json: bool,
    },
    /// Classify a code stored in a GMAT or PMUL file
    Analyze {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// List candidate MWS weight sets for a length or a spread
    Enumerate {
        #[arg(long)]
        q: String,
        #[arg(long)]
        k: u32,
        #[arg(long, conflicts_with = "delta")]
        n: Option<u64>,
        #[arg(long)]
        delta: Option<u64>,
    },
    /// Search for an MWS multiset of the given length
    Search {
        #[arg(long)]
        q: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long = "max-iters", default_value_t = 1_000_000)]
        max_iters: u64,
        #[arg(long, value_enum, default_value = "randomized")]
        mode: Mode,
        /// File for the PMUL hit; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the library invariants over all prime powers q <= q-max
    Verify {
        #[arg(long = "q-max", default_value_t = 4)]
        q_max: u64,
        #[arg(long = "k-max", default_value_t = 3)]
        k_max: u32,
        #[arg(long)]
        json: bool,
    },
}

/// Failures are ordinary results here so that main can pick the exit code.
pub enum CmdError {
    /// Bad usage, unreadable or malformed input, guard violations.
    Input(String),
    /// A well-formed run whose checks did not pass.
    Check(String),
}

impl From<mws_core::Error> for CmdError {
    fn from(e: mws_core::Error) -> Self {
        CmdError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Construct { family, q, k, out, format, json } => {
            commands::construct(family, q.as_deref(), k, out.as_deref(), format, json)
        }
        Cmd::Analyze { path, method, json } => commands::analyze(&path, method, json),
        Cmd::Enumerate { q, k, n, delta } => commands::enumerate(&q, k, n, delta),
        Cmd::Search { q, k, n, seed, max_iters, mode, out } => {
            commands::search(&q, k, n, seed, max_iters, mode, out.as_deref())
        }
        Cmd::Verify { q_max, k_max, json } => verify::run(q_max, k_max, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
