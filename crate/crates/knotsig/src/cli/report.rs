//! Knot records (the input format) and reports (the output format).
//!
//! A knot record is a JSON object with a name and an integer matrix; a
//! corpus is one record per line. Reports keep every exact quantity as a
//! decimal or `p/q` string so they stay exact and byte-stable; only the
//! explicitly `_approx` columns of the TSV export carry floats.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::knot::{
    doubly_slice_verdict, signature_profile, slice_verdict, ObstructionVerdict, SeifertMatrix,
    SignatureProfile, Verdict, Witness,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    pub matrix: Vec<Vec<i64>>,
}

impl KnotRecord {
    pub fn to_seifert(&self) -> Result<SeifertMatrix, CliError> {
        Ok(SeifertMatrix::from_rows(self.matrix.clone())?.with_name(self.name.as_str()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    /// Alexander coefficients, lowest degree first, as exact integers.
    pub alexander: Vec<String>,
    /// The same polynomial in human-readable form.
    pub alexander_polynomial: String,
    pub determinant: String,
    pub signature_at_minus_one: i64,
    pub profile: ProfileReport,
    pub slice_verdict: VerdictReport,
    pub doubly_slice_verdict: VerdictReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub jumps: Vec<JumpReport>,
    pub arc_values: Vec<i64>,
    pub arcs: Vec<ArcReport>,
    pub value_at_minus_one: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpReport {
    pub lo: String,
    pub hi: String,
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_x: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcReport {
    pub sample_x: String,
    pub rank: usize,
    pub signature: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub verdict: String,
    pub criterion: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub x: String,
    pub half: String,
    pub rank: usize,
    pub signature: i64,
}

impl From<&Witness> for WitnessReport {
    fn from(w: &Witness) -> Self {
        WitnessReport {
            x: w.point.x().to_string(),
            half: w.point.half().label().to_string(),
            rank: w.rank,
            signature: w.signature,
        }
    }
}

impl From<&ObstructionVerdict> for VerdictReport {
    fn from(v: &ObstructionVerdict) -> Self {
        VerdictReport {
            verdict: match v.verdict {
                Verdict::Obstructed => "obstructed".to_string(),
                Verdict::Inconclusive => "inconclusive".to_string(),
            },
            criterion: v.criterion.clone(),
            witness: v.witness.as_ref().map(WitnessReport::from),
        }
    }
}

fn profile_report(profile: &SignatureProfile) -> ProfileReport {
    ProfileReport {
        jumps: profile
            .jumps()
            .iter()
            .map(|j| JumpReport {
                lo: j.interval.lo.to_string(),
                hi: j.interval.hi.to_string(),
                multiplicity: j.interval.multiplicity,
                exact_x: j.exact_x.as_ref().map(|x| x.to_string()),
            })
            .collect(),
        arc_values: profile.arc_values(),
        arcs: profile
            .arcs()
            .iter()
            .map(|a| ArcReport {
                sample_x: a.sample_x.to_string(),
                rank: a.rank,
                signature: a.signature,
            })
            .collect(),
        value_at_minus_one: profile.value_at_minus_one(),
    }
}

impl Report {
    /// Runs the whole invariant pipeline for one knot.
    pub fn for_knot(name: &str, matrix: &SeifertMatrix) -> Result<Report, CliError> {
        let alexander = matrix.alexander_polynomial();
        let profile = signature_profile(matrix)?;
        let slice = slice_verdict(&profile);
        let doubly = doubly_slice_verdict(matrix, &profile);
        Ok(Report {
            name: name.to_string(),
            alexander: alexander.coeffs().iter().map(|c| c.to_string()).collect(),
            alexander_polynomial: alexander.to_string(),
            determinant: matrix.knot_determinant().to_string(),
            signature_at_minus_one: profile.value_at_minus_one(),
            profile: profile_report(&profile),
            slice_verdict: VerdictReport::from(&slice),
            doubly_slice_verdict: VerdictReport::from(&doubly),
        })
    }
}

fn write_verdict(f: &mut fmt::Formatter<'_>, label: &str, v: &VerdictReport) -> fmt::Result {
    writeln!(
        f,
        "{label:<16} {} ({})",
        v.verdict.to_uppercase(),
        v.criterion
    )?;
    if let Some(w) = &v.witness {
        writeln!(
            f,
            "{:<16} x = {} ({} half), rank {}, signature {}",
            "  witness:", w.x, w.half, w.rank, w.signature
        )?;
    }
    Ok(())
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<16} {}", "knot:", self.name)?;
        writeln!(f, "{:<16} [{}]", "alexander:", self.alexander.join(", "))?;
        writeln!(f, "{:<16} {}", "", self.alexander_polynomial)?;
        writeln!(f, "{:<16} {}", "determinant:", self.determinant)?;
        writeln!(f, "{:<16} {}", "signature(-1):", self.signature_at_minus_one)?;
        if self.profile.jumps.is_empty() {
            writeln!(f, "{:<16} none", "jumps:")?;
        }
        for (i, j) in self.profile.jumps.iter().enumerate() {
            let label = if i == 0 { "jumps:" } else { "" };
            let exact = match &j.exact_x {
                Some(x) => format!(", exact x = {x}"),
                None => ", irrational x".to_string(),
            };
            writeln!(
                f,
                "{label:<16} x in ({}, {}), multiplicity {}{exact}",
                j.lo, j.hi, j.multiplicity
            )?;
        }
        for (i, a) in self.profile.arcs.iter().enumerate() {
            let label = if i == 0 { "arcs:" } else { "" };
            writeln!(
                f,
                "{label:<16} sample x = {}: rank {}, signature {}",
                a.sample_x, a.rank, a.signature
            )?;
        }
        write_verdict(f, "slice:", &self.slice_verdict)?;
        write_verdict(f, "doubly slice:", &self.doubly_slice_verdict)?;
        Ok(())
    }
}

/// One line of a batch output file: either a full report or the
/// validation failure for that record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchEntry {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
}

impl BatchEntry {
    pub fn from_record(record: &KnotRecord) -> BatchEntry {
        match record
            .to_seifert()
            .and_then(|m| Report::for_knot(&record.name, &m))
        {
            Ok(report) => BatchEntry {
                name: record.name.clone(),
                status: "ok".to_string(),
                error: None,
                report: Some(report),
            },
            Err(e) => BatchEntry {
                name: record.name.clone(),
                status: "error".to_string(),
                error: Some(e.to_string()),
                report: None,
            },
        }
    }
}
