//! The signature step function over the upper half circle and the slice /
//! doubly-slice obstructions read from it.
//!
//! The signature of a knot is constant on the open arcs between roots of
//! the Alexander polynomial, so a profile is: isolating intervals for the
//! jump locations in x = cos(theta), one exact sample per arc, and the
//! value at omega = -1. Arcs are ordered by decreasing x (theta running
//! from 0 to pi), matching the jump order.

use super::circle::CirclePoint;
use super::seifert::SeifertMatrix;
use super::signature::{levine_tristram_at, trace_polynomial};
use super::KnotError;
use crate::algebra::{rat, sturm_isolate, IsolatingInterval, Rational};

use num::One;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    Inconclusive,
}

/// A circle point with a nonzero signature backing an obstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: CirclePoint,
    pub rank: usize,
    pub signature: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Which test fired (or why nothing did), as a short tag.
    pub criterion: String,
}

impl ObstructionVerdict {
    pub fn is_obstructed(&self) -> bool {
        self.verdict == Verdict::Obstructed
    }
}

/// Jump location of the signature function: an isolating interval in
/// x = cos(theta), plus the exact root when its cosine is rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpLocation {
    pub interval: IsolatingInterval,
    pub exact_x: Option<Rational>,
}

/// One sampled point of a maximal arc, with the constant values there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSample {
    pub sample_x: Rational,
    pub rank: usize,
    pub signature: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureProfile {
    jumps: Vec<JumpLocation>,
    arcs: Vec<ArcSample>,
    minus_one_rank: usize,
    minus_one_signature: i64,
}

impl SignatureProfile {
    /// Jump locations by decreasing x; jump i separates arcs i and i+1.
    pub fn jumps(&self) -> &[JumpLocation] {
        &self.jumps
    }

    /// Arc samples by decreasing x; the first arc is adjacent to omega = 1.
    pub fn arcs(&self) -> &[ArcSample] {
        &self.arcs
    }

    pub fn arc_values(&self) -> Vec<i64> {
        self.arcs.iter().map(|a| a.signature).collect()
    }

    pub fn value_at_minus_one(&self) -> i64 {
        self.minus_one_signature
    }

    pub fn rank_at_minus_one(&self) -> usize {
        self.minus_one_rank
    }
}

/// Computes the full signature profile of a knot: Alexander roots on the
/// circle located via the trace polynomial, one exact evaluation per arc,
/// and the value at omega = -1.
pub fn signature_profile(a: &SeifertMatrix) -> Result<SignatureProfile, KnotError> {
    let delta = a.alexander_polynomial();
    let trace = trace_polynomial(&delta)?;
    let intervals = if trace.degree().map_or(true, |d| d == 0) {
        Vec::new()
    } else {
        sturm_isolate(&trace, &-Rational::one(), &Rational::one())?
    };

    // exact rational jump locations, when the coefficients let the
    // rational root theorem enumerate candidates
    let rational_roots = if intervals.is_empty() {
        Some(Vec::new())
    } else {
        trace.rational_roots()
    };
    let jumps: Vec<JumpLocation> = intervals
        .into_iter()
        .rev() // decreasing x
        .map(|interval| {
            let exact_x = rational_roots
                .as_ref()
                .and_then(|roots| roots.iter().find(|r| interval.contains(r)).cloned());
            JumpLocation { interval, exact_x }
        })
        .collect();

    // one sample per maximal gap, walking down from x = 1 to x = -1
    let mut arcs = Vec::with_capacity(jumps.len() + 1);
    let mut upper = Rational::one();
    for jump in &jumps {
        arcs.push(sample_arc(a, &jump.interval.hi, &upper)?);
        upper = jump.interval.lo.clone();
    }
    arcs.push(sample_arc(a, &-Rational::one(), &upper)?);

    let (minus_one_rank, minus_one_signature) =
        levine_tristram_at(a, &CirclePoint::minus_one());

    Ok(SignatureProfile {
        jumps,
        arcs,
        minus_one_rank,
        minus_one_signature,
    })
}

fn sample_arc(a: &SeifertMatrix, lo: &Rational, hi: &Rational) -> Result<ArcSample, KnotError> {
    let sample_x = (lo + hi) / rat(2, 1);
    let point = CirclePoint::upper(sample_x.clone())?;
    let (rank, signature) = levine_tristram_at(a, &point);
    Ok(ArcSample {
        sample_x,
        rank,
        signature,
    })
}

/// Slice obstruction: a slice knot has vanishing signature away from the
/// Alexander roots, so any nonzero arc value obstructs.
pub fn slice_obstruction(a: &SeifertMatrix) -> Result<ObstructionVerdict, KnotError> {
    Ok(slice_verdict(&signature_profile(a)?))
}

/// Slice verdict from an already computed profile.
pub fn slice_verdict(profile: &SignatureProfile) -> ObstructionVerdict {
    for arc in profile.arcs() {
        if arc.signature != 0 {
            return ObstructionVerdict {
                verdict: Verdict::Obstructed,
                witness: Some(Witness {
                    point: CirclePoint::upper(arc.sample_x.clone())
                        .expect("arc samples lie inside (-1, 1)"),
                    rank: arc.rank,
                    signature: arc.signature,
                }),
                criterion: "nonzero signature on an arc away from the Alexander roots".into(),
            };
        }
    }
    ObstructionVerdict {
        verdict: Verdict::Inconclusive,
        witness: None,
        criterion: "signature vanishes on every arc away from the Alexander roots".into(),
    }
}

/// Doubly-slice obstruction: the signature of a doubly slice knot vanishes
/// on the whole circle, so arcs, omega = -1 and the jump locations
/// themselves are all tested. Jump locations whose cosine is irrational
/// are skipped for exact evaluation and counted in the criterion tag.
pub fn doubly_slice_obstruction(a: &SeifertMatrix) -> Result<ObstructionVerdict, KnotError> {
    Ok(doubly_slice_verdict(a, &signature_profile(a)?))
}

/// Doubly-slice verdict from an already computed profile.
pub fn doubly_slice_verdict(a: &SeifertMatrix, profile: &SignatureProfile) -> ObstructionVerdict {
    let arc_check = slice_verdict(profile);
    if arc_check.is_obstructed() {
        return ObstructionVerdict {
            criterion: "nonzero signature on an arc of the circle".into(),
            ..arc_check
        };
    }
    if profile.value_at_minus_one() != 0 {
        return ObstructionVerdict {
            verdict: Verdict::Obstructed,
            witness: Some(Witness {
                point: CirclePoint::minus_one(),
                rank: profile.rank_at_minus_one(),
                signature: profile.value_at_minus_one(),
            }),
            criterion: "nonzero signature at omega = -1".into(),
        };
    }
    let mut unevaluated = 0usize;
    for jump in profile.jumps() {
        match &jump.exact_x {
            Some(x) => {
                let point = CirclePoint::upper(x.clone())
                    .expect("jump locations lie inside (-1, 1)");
                let (rank, signature) = levine_tristram_at(a, &point);
                if signature != 0 {
                    return ObstructionVerdict {
                        verdict: Verdict::Obstructed,
                        witness: Some(Witness { point, rank, signature }),
                        criterion: "nonzero signature at a root of the Alexander polynomial"
                            .into(),
                    };
                }
            }
            None => unevaluated += 1,
        }
    }
    let criterion = if unevaluated == 0 {
        "signature vanishes at every tested point of the circle".to_string()
    } else {
        format!(
            "signature vanishes at every tested point of the circle \
             ({unevaluated} jump location(s) with irrational cosine unevaluated)"
        )
    };
    ObstructionVerdict {
        verdict: Verdict::Inconclusive,
        witness: None,
        criterion,
    }
}
