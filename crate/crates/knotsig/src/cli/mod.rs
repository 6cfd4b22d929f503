//! File ingestion, report assembly and the command entry points behind the
//! `knotsig` binary. Everything here is a thin, testable layer over the
//! library; exit status is decided by the binary from the returned Result
//! and encodes I/O validity only, never a mathematical verdict.

mod commands;
mod report;

pub use commands::{
    run_at, run_batch, run_invariants, run_pretzel, run_profile, profile_tsv,
};
pub use report::{ArcReport, BatchEntry, JumpReport, KnotRecord, ProfileReport, Report,
    VerdictReport, WitnessReport};

use crate::knot::KnotError;
use crate::pretzel::PretzelError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse knot record {path}: {message}")]
    RecordParse { path: String, message: String },
    #[error("corpus line {line}: {message}")]
    CorpusParse { line: usize, message: String },
    #[error("duplicate knot name {name:?} at corpus line {line}")]
    DuplicateName { name: String, line: usize },
    #[error("invalid circle point {0:?}: expected a rational p/q with -1 <= p/q <= 1")]
    InvalidX(String),
    #[error("unsupported pretzel family ({0}, {1}, {2}): this release handles P(3,-3,-m) with m >= 3")]
    UnsupportedFamily(i64, i64, i64),
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Pretzel(#[from] PretzelError),
}
