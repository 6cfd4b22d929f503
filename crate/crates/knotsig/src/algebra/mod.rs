//! Exact arithmetic substrate: rationals, imaginary quadratic field
//! elements, integer polynomials, Hermitian congruence diagonalization and
//! Sturm root isolation. No floating point anywhere.

pub mod hermitian;
pub mod poly;
pub mod quad;
pub mod rational;
pub mod sturm;

pub use hermitian::HermitianMatrix;
pub use poly::{polynomial_det, IntPolynomial};
pub use quad::QuadElement;
pub use rational::{extract_square_part, rat, rat_int, Rational};
pub use sturm::{
    default_isolation_width, sturm_isolate, sturm_isolate_with_width, IsolatingInterval,
};

use num::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("field mismatch: u^2 = -{0} combined with u^2 = -{1}")]
    FieldMismatch(BigInt, BigInt),
    #[error("matrix is not Hermitian at entry ({0}, {1})")]
    NotHermitian(usize, usize),
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NonSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}
