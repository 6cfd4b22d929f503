//! Exact knot invariants from Seifert matrices.
//!
//! Everything in the verdict path is exact arithmetic: arbitrary-precision
//! rationals, imaginary quadratic field elements, integer polynomials and
//! Sturm root isolation. No floating point is used outside explicitly
//! approximate plot columns.
//!
//! Given a Seifert matrix A (any square integer matrix of even dimension
//! with det(A - A^T) = 1), the library computes:
//!
//! - the Alexander polynomial det(A - t A^T), normalized to have nonzero
//!   constant term and value +1 at t = 1;
//! - the Levine-Tristram signature, the signature of
//!   (1-omega)A + (1-conj(omega))A^T, at exact circle points
//!   omega = x + i sqrt(1-x^2) with rational x;
//! - the full signature profile over the upper half circle: jump
//!   locations isolated as rational intervals, one exact sample per arc;
//! - slice and doubly-slice obstruction verdicts, including the pretzel
//!   case analysis for the family P(3,-3,-m).
//!
//! Start with the runnable examples (`cargo run --example pretzel_family`
//! and friends); the `knotsig` binary exposes the same pipeline on knot
//! record files.

pub mod algebra;
pub mod cli;
pub mod knot;
pub mod pretzel;

pub use algebra::{
    polynomial_det, rat, rat_int, sturm_isolate, sturm_isolate_with_width, AlgebraError,
    HermitianMatrix, IntPolynomial, IsolatingInterval, QuadElement, Rational,
};
pub use knot::{
    doubly_slice_obstruction, doubly_slice_verdict, levine_tristram_at, signature_matrix,
    signature_profile, slice_obstruction, slice_verdict, trace_polynomial, ArcSample,
    CirclePoint, HalfPlane, JumpLocation, KnotError, ObstructionVerdict, SeifertMatrix,
    SignatureProfile, Verdict, Witness,
};
pub use pretzel::{
    odd_pretzel_doubly_slice_test, pretzel_3_minus3_m_verdict, seifert_matrix_a_k,
    PretzelError, PretzelParams,
};
