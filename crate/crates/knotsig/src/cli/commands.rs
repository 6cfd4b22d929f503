//! Implementations of the CLI subcommands, kept in the library so tests
//! can drive them directly.

use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num::ToPrimitive;
use rayon::prelude::*;

use super::report::{BatchEntry, KnotRecord, Report};
use super::CliError;
use crate::algebra::Rational;
use crate::knot::{levine_tristram_at, signature_profile, CirclePoint, SeifertMatrix,
    SignatureProfile};
use crate::pretzel::{pretzel_3_minus3_m_verdict, seifert_matrix_a_k};

fn read_record(path: &Path) -> Result<KnotRecord, CliError> {
    let text = fs::read_to_string(path)?;
    let record: KnotRecord =
        serde_json::from_str(&text).map_err(|e| CliError::RecordParse {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    if record.name.is_empty() {
        return Err(CliError::RecordParse {
            path: path.display().to_string(),
            message: "knot name must be nonempty".to_string(),
        });
    }
    Ok(record)
}

/// `invariants <input>`: full report for one knot, to stdout.
pub fn run_invariants(input: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let record = read_record(input)?;
    let matrix = record.to_seifert()?;
    let report = Report::for_knot(&record.name, &matrix)?;
    write!(out, "{report}")?;
    Ok(())
}

/// `at <input> --x p/q [--lower]`: exact rank and signature at one point.
pub fn run_at(input: &Path, x: &str, lower: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let record = read_record(input)?;
    let matrix = record.to_seifert()?;
    let x = Rational::from_str(x).map_err(|_| CliError::InvalidX(x.to_string()))?;
    let point = if lower {
        CirclePoint::lower(x)?
    } else {
        CirclePoint::upper(x)?
    };
    let (rank, signature) = levine_tristram_at(&matrix, &point);
    writeln!(out, "point: {point}")?;
    writeln!(out, "rank: {rank}")?;
    writeln!(out, "signature: {signature}")?;
    Ok(())
}

/// Matches (p, q, r) against the family (3, -3, -m) up to permutation,
/// returning m >= 3 on success.
fn family_parameter(p: i64, q: i64, r: i64) -> Option<i64> {
    let mut v = vec![p, q, r];
    let pos = v.iter().position(|&t| t == 3)?;
    v.remove(pos);
    let neg = v.iter().position(|&t| t == -3)?;
    v.remove(neg);
    let m = -v[0];
    (m >= 3).then_some(m)
}

/// `pretzel <p> <q> <r>`: doubly-slice verdict for P(3,-3,-m). Even m
/// goes through the Seifert matrix A_(m/2) and prints the full report;
/// odd m is decided by the parameter classifier alone.
pub fn run_pretzel(p: i64, q: i64, r: i64, out: &mut dyn Write) -> Result<(), CliError> {
    let m = family_parameter(p, q, r).ok_or(CliError::UnsupportedFamily(p, q, r))?;
    if m % 2 == 0 {
        let matrix = seifert_matrix_a_k(m / 2)?;
        let name = matrix.name().expect("A_k is named").to_string();
        let report = Report::for_knot(&name, &matrix)?;
        write!(out, "{report}")?;
    } else {
        let verdict = pretzel_3_minus3_m_verdict(m)?;
        let label = match verdict.verdict {
            crate::knot::Verdict::Obstructed => "OBSTRUCTED",
            crate::knot::Verdict::Inconclusive => "INCONCLUSIVE",
        };
        writeln!(out, "{:<16} P(3,-3,-{m})", "knot:")?;
        writeln!(out, "{:<16} odd pretzel (3, -3, -{m})", "family:")?;
        writeln!(out, "{:<16} {label} ({})", "doubly slice:", verdict.criterion)?;
    }
    Ok(())
}

/// `batch <corpus> --out <path> [--serial]`: one JSON report line per
/// record, order preserving, deterministic under parallelism.
pub fn run_batch(corpus: &Path, out_path: &Path, serial: bool) -> Result<(), CliError> {
    let text = fs::read_to_string(corpus)?;
    let mut records = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let record: KnotRecord =
            serde_json::from_str(line).map_err(|e| CliError::CorpusParse {
                line: idx + 1,
                message: e.to_string(),
            })?;
        if record.name.is_empty() {
            return Err(CliError::CorpusParse {
                line: idx + 1,
                message: "knot name must be nonempty".to_string(),
            });
        }
        if !seen.insert(record.name.clone()) {
            return Err(CliError::DuplicateName {
                name: record.name,
                line: idx + 1,
            });
        }
        records.push(record);
    }
    let entries: Vec<BatchEntry> = if serial {
        records.iter().map(BatchEntry::from_record).collect()
    } else {
        records.par_iter().map(BatchEntry::from_record).collect()
    };
    let mut buffer = String::new();
    for entry in &entries {
        buffer.push_str(&serde_json::to_string(entry).expect("reports serialize"));
        buffer.push('\n');
    }
    fs::write(out_path, buffer)?;
    Ok(())
}

/// `profile <input> --tsv <path>`: the signature step function as a
/// tab-separated table.
pub fn run_profile(input: &Path, tsv_path: &Path) -> Result<(), CliError> {
    let record = read_record(input)?;
    let matrix = record.to_seifert()?;
    let profile = signature_profile(&matrix)?;
    fs::write(tsv_path, profile_tsv(&matrix, &profile))?;
    Ok(())
}

fn approx(r: &Rational) -> String {
    format!("{:.11e}", r.to_f64().unwrap_or(f64::NAN))
}

/// Renders a profile as TSV rows (x_lo, x_hi, signature) covering the
/// upper half circle: arcs in decreasing x, jump rows between them, and a
/// final row for omega = -1. Exact columns are rational text; the
/// `_approx` columns are 12-significant-digit floats for plotting.
pub fn profile_tsv(matrix: &SeifertMatrix, profile: &SignatureProfile) -> String {
    let mut rows = String::from("kind\tx_lo\tx_hi\tsignature\tx_lo_approx\tx_hi_approx\n");
    let mut push_row = |kind: &str, lo: &Rational, hi: &Rational, sig: Option<i64>| {
        let sig = sig.map(|s| s.to_string()).unwrap_or_default();
        rows.push_str(&format!(
            "{kind}\t{lo}\t{hi}\t{sig}\t{}\t{}\n",
            approx(lo),
            approx(hi)
        ));
    };
    let one = Rational::from_integer(1.into());
    let minus_one = -&one;
    let jumps = profile.jumps();
    let arcs = profile.arcs();
    for (i, arc) in arcs.iter().enumerate() {
        // the arc sits between jump i-1 (larger x) and jump i (smaller x)
        let upper = if i == 0 {
            one.clone()
        } else {
            jump_lower_edge(&jumps[i - 1])
        };
        let lower = if i < jumps.len() {
            jump_upper_edge(&jumps[i])
        } else {
            minus_one.clone()
        };
        push_row("arc", &lower, &upper, Some(arc.signature));
        if i < jumps.len() {
            let jump = &jumps[i];
            match &jump.exact_x {
                Some(x) => {
                    let point = CirclePoint::upper(x.clone())
                        .expect("jump locations lie inside (-1, 1)");
                    let (_, sig) = levine_tristram_at(matrix, &point);
                    push_row("jump", x, x, Some(sig));
                }
                None => push_row("jump", &jump.interval.lo, &jump.interval.hi, None),
            }
        }
    }
    push_row("point", &minus_one, &minus_one, Some(profile.value_at_minus_one()));
    rows
}

fn jump_upper_edge(jump: &crate::knot::JumpLocation) -> Rational {
    jump.exact_x.clone().unwrap_or_else(|| jump.interval.hi.clone())
}

fn jump_lower_edge(jump: &crate::knot::JumpLocation) -> Rational {
    jump.exact_x.clone().unwrap_or_else(|| jump.interval.lo.clone())
}
