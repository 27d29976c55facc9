//! `hodge-degen`: validate, classify and draw degenerations of polarized
//! Hodge structures.
//!
//! Exit codes: `0` pass, `1` semantic failure (a validation clause, the
//! Hodge–Tate gate, a catalog diff, a corpus invariant), `2` input error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Minimal,
    HodgeTate,
    ClosedOrbit,
}

#[derive(Debug, Parser)]
#[command(name = "hodge-degen", version, about = "Degenerations of polarized Hodge structures")]
pub struct Cli {
    /// Output format (default: json, or ascii for `diagram`).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the primary output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Centre of the weight filtration (default: the weight).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub center: Option<i64>,
    /// Sample points y for exp(iyN)F, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub samples: Option<Vec<String>>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a polarized Hodge structure or nilpotent-orbit payload.
    Validate { path: PathBuf },
    /// Classify degenerations for weight N and Hodge numbers H.
    Classify {
        n: i64,
        /// Hodge numbers h^{n,0},...,h^{0,n}, comma separated.
        #[arg(value_delimiter = ',', required = true)]
        h: Vec<usize>,
        #[arg(value_enum)]
        mode: Mode,
        /// Write one payload per constructed witness into DIR.
        #[arg(long, value_name = "DIR")]
        witness_dir: Option<PathBuf>,
        /// Check a given nilpotent-orbit payload (closed-orbit mode).
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
    },
    /// Draw the (p,q)-diagram of a diagram spec, a payload, or a catalog row.
    Diagram {
        input: String,
        /// For catalog rows, draw the adjoint diagram instead of V.
        #[arg(long)]
        adjoint: bool,
        /// Draw N-arrows (SVG).
        #[arg(long)]
        arrows: bool,
    },
    /// List the catalog, or recompute an entry against its golden data.
    Catalog { name: Option<String> },
    /// Run every invariant over the generated corpus.
    VerifyCorpus {
        #[arg(long, default_value_t = hodge_degen::corpus::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        limit: Option<usize>,
        /// Report every case, not only the summary.
        #[arg(long)]
        full: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
