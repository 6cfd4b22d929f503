use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use knotsig::cli;

#[derive(Parser)]
#[command(
    name = "knotsig",
    version,
    about = "Exact Seifert-matrix knot invariants: Alexander polynomial, \
             Levine-Tristram signatures, slice and doubly-slice obstructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one knot record file
    Invariants {
        /// JSON file {"name": "...", "matrix": [[...], ...]}
        input: PathBuf,
    },
    /// Exact rank and signature of the Levine-Tristram form at one circle point
    At {
        input: PathBuf,
        /// Real part cos(theta) as a rational "p/q" with -1 <= p/q <= 1
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Evaluate in the lower half plane (default: upper)
        #[arg(long)]
        lower: bool,
    },
    /// Doubly-slice verdict for the pretzel knots P(3,-3,-m), m >= 3
    Pretzel {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
    },
    /// Process a corpus (one JSON record per line) into a JSON-lines report
    Batch {
        corpus: PathBuf,
        /// Output report path
        #[arg(long)]
        out: PathBuf,
        /// Process records sequentially instead of in parallel
        #[arg(long)]
        serial: bool,
    },
    /// Export the signature step function as a tab-separated table
    Profile {
        input: PathBuf,
        /// Output TSV path
        #[arg(long)]
        tsv: PathBuf,
    },
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match args.command {
        Command::Invariants { input } => cli::run_invariants(&input, &mut out),
        Command::At { input, x, lower } => cli::run_at(&input, &x, lower, &mut out),
        Command::Pretzel { p, q, r } => cli::run_pretzel(p, q, r, &mut out),
        Command::Batch { corpus, out: out_path, serial } => {
            cli::run_batch(&corpus, &out_path, serial)
        }
        Command::Profile { input, tsv } => cli::run_profile(&input, &tsv),
    };
    match result {
        Ok(()) => {
            let _ = out.flush();
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
