//! Knot invariants from Seifert matrices: Alexander polynomial,
//! Levine-Tristram signatures at exact circle points, the full signature
//! profile over the upper half circle, and the slice / doubly-slice
//! obstructions they support.

pub mod circle;
pub mod profile;
pub mod seifert;
pub mod signature;

pub use circle::{CirclePoint, HalfPlane};
pub use profile::{
    doubly_slice_obstruction, doubly_slice_verdict, signature_profile, slice_obstruction,
    slice_verdict, ArcSample, JumpLocation, ObstructionVerdict, SignatureProfile, Verdict,
    Witness,
};
pub use seifert::SeifertMatrix;
pub use signature::{levine_tristram_at, signature_matrix, trace_polynomial};

use num::BigInt;

use crate::algebra::{AlgebraError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnotError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("Seifert matrix must have even dimension, got {0}")]
    OddDimension(usize),
    #[error("skew part A - A^T has determinant {0}, expected 1")]
    NotUnimodularSkew(BigInt),
    #[error("polynomial is not reciprocal up to sign")]
    NotReciprocal,
    #[error("circle point needs -1 <= x <= 1, got {0}")]
    XOutOfRange(Rational),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
