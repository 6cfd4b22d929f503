//! Seifert matrices and the invariants read off directly from them.
//!
//! A Seifert matrix here is any square integer matrix A of even dimension
//! with det(A - A^T) = 1; validity is checked once at construction. The
//! 0x0 matrix is the unknot representative. Skew unimodular matrices of
//! even size always have determinant +1 (it is a square), so the check is
//! against +1 exactly.

use num::{BigInt, One, Signed};

use super::KnotError;
use crate::algebra::{polynomial_det, IntPolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    n: usize,
    entries: Vec<BigInt>, // row major
    name: Option<String>,
}

impl SeifertMatrix {
    /// Validates and wraps an integer matrix: square, even dimension,
    /// unimodular skew part.
    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, KnotError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(KnotError::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        if n % 2 != 0 {
            return Err(KnotError::OddDimension(n));
        }
        let skew: Vec<Vec<IntPolynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| IntPolynomial::constant(&rows[i][j] - &rows[j][i]))
                    .collect()
            })
            .collect();
        let det = polynomial_det(&skew)
            .expect("skew part is square")
            .constant_term();
        if !det.is_one() {
            return Err(KnotError::NotUnimodularSkew(det));
        }
        Ok(SeifertMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
            name: None,
        })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, KnotError> {
        SeifertMatrix::from_bigint_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    /// The 0x0 matrix: a Seifert matrix for the unknot.
    pub fn unknot() -> Self {
        SeifertMatrix {
            n: 0,
            entries: Vec::new(),
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Genus of the underlying surface: dimension / 2.
    pub fn genus(&self) -> usize {
        self.n / 2
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    /// Alexander polynomial det(A - t A^T), normalized so the constant
    /// term is nonzero and the value at t = 1 is +1.
    pub fn alexander_polynomial(&self) -> IntPolynomial {
        let n = self.n;
        if n == 0 {
            return IntPolynomial::one();
        }
        let rows: Vec<Vec<IntPolynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        IntPolynomial::from_coeffs(vec![
                            self.entry(i, j).clone(),
                            -self.entry(j, i),
                        ])
                    })
                    .collect()
            })
            .collect();
        let raw = polynomial_det(&rows).expect("matrix is square");
        // det(A - A^T) = 1 pins the value at t = 1, so the determinant is
        // nonzero and, after stripping t^j, already +1 there.
        let val = raw.valuation().expect("Alexander determinant is nonzero");
        let mut delta = raw.shift_down(val);
        if delta.eval_int(&BigInt::one()).is_negative() {
            delta = IntPolynomial::from_coeffs(delta.coeffs().iter().map(|c| -c).collect());
        }
        debug_assert!(delta.eval_int(&BigInt::one()).is_one());
        delta
    }

    /// |Delta(-1)|, the determinant of the knot.
    pub fn knot_determinant(&self) -> BigInt {
        self.alexander_polynomial()
            .eval_int(&BigInt::from(-1))
            .abs()
    }
}
