//! The pretzel knot case analysis: the explicit Seifert matrices A_k for
//! P(3,-3,-2k), the parameter classifier for odd pretzel knots, and the
//! combined doubly-slice verdict for P(3,-3,-m).

use crate::knot::{
    doubly_slice_obstruction, seifert::SeifertMatrix, KnotError, ObstructionVerdict, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PretzelError {
    #[error("pretzel parameters must be nonzero")]
    ZeroParameter,
    #[error("pretzel parameter list must be nonempty")]
    EmptyParameters,
    #[error("parameter {0} is outside the family (needs m >= 3, A_k needs k >= 2)")]
    OutOfFamily(i64),
    #[error("not an odd pretzel knot: needs an odd number of parameters, all odd")]
    NotOddPretzel,
    #[error(transparent)]
    Knot(#[from] KnotError),
}

/// Twist parameters (p_1, ..., p_n) of a pretzel knot, all nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PretzelParams {
    params: Vec<i64>,
}

impl PretzelParams {
    pub fn new(params: Vec<i64>) -> Result<Self, PretzelError> {
        if params.is_empty() {
            return Err(PretzelError::EmptyParameters);
        }
        if params.iter().any(|&p| p == 0) {
            return Err(PretzelError::ZeroParameter);
        }
        Ok(PretzelParams { params })
    }

    pub fn params(&self) -> &[i64] {
        &self.params
    }

    /// Odd pretzel: an odd number of parameters, each odd.
    pub fn is_odd_pretzel(&self) -> bool {
        self.params.len() % 2 == 1 && self.params.iter().all(|p| p % 2 != 0)
    }
}

/// The 6x6 Seifert matrix A_k of the pretzel knot P(3,-3,-2k), k >= 2.
pub fn seifert_matrix_a_k(k: i64) -> Result<SeifertMatrix, PretzelError> {
    if k < 2 {
        return Err(PretzelError::OutOfFamily(k));
    }
    let rows = vec![
        vec![-1, -1, 0, 0, -1, 0],
        vec![0, -1, 0, 0, -1, 0],
        vec![0, 0, 1, 1, 1, 0],
        vec![0, 0, 0, 1, 1, 0],
        vec![0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 1, -k],
    ];
    let name = format!("P(3,-3,-{})", 2 * k);
    Ok(SeifertMatrix::from_rows(rows)
        .expect("A_k has unimodular skew part for every k")
        .with_name(name))
}

/// Doubly-slice classification of an odd pretzel knot by its parameters:
/// the knot survives the test only when the parameter multiset is a
/// permutation of (a, -a, a, -a, ..., a) for some odd a.
pub fn odd_pretzel_doubly_slice_test(
    p: &PretzelParams,
) -> Result<ObstructionVerdict, PretzelError> {
    if !p.is_odd_pretzel() {
        return Err(PretzelError::NotOddPretzel);
    }
    let n = p.params().len();
    let mut sorted = p.params().to_vec();
    sorted.sort_unstable();
    let mut candidates = sorted.clone();
    candidates.dedup();
    for a in candidates {
        let Some(neg) = a.checked_neg() else { continue };
        let mut family: Vec<i64> = std::iter::repeat(a)
            .take(n / 2 + 1)
            .chain(std::iter::repeat(neg).take(n / 2))
            .collect();
        family.sort_unstable();
        if family == sorted {
            return Ok(ObstructionVerdict {
                verdict: Verdict::Inconclusive,
                witness: None,
                criterion: format!(
                    "parameters are a permutation of the alternating family with a = {a}"
                ),
            });
        }
    }
    Ok(ObstructionVerdict {
        verdict: Verdict::Obstructed,
        witness: None,
        criterion: "parameters match no alternating family (a, -a, ..., a)".into(),
    })
}

/// Doubly-slice verdict for P(3,-3,-m), m >= 3: odd m goes through the
/// parameter classifier, even m through the signature obstruction on A_k
/// with k = m/2.
pub fn pretzel_3_minus3_m_verdict(m: i64) -> Result<ObstructionVerdict, PretzelError> {
    if m < 3 {
        return Err(PretzelError::OutOfFamily(m));
    }
    if m % 2 == 1 {
        odd_pretzel_doubly_slice_test(&PretzelParams::new(vec![3, -3, -m])?)
    } else {
        Ok(doubly_slice_obstruction(&seifert_matrix_a_k(m / 2)?)?)
    }
}
