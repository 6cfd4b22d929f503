//! Hermitian matrices over an imaginary quadratic field, with exact rank
//! and signature by congruence diagonalization.
//!
//! The diagonal of a Hermitian matrix is real, so every pivot decision is a
//! rational sign test: a nonzero real pivot contributes its sign to the
//! signature and one to the rank; when the remaining diagonal is all zero
//! but the block is not, an off-diagonal entry `m` spans a hyperbolic
//! 2x2 block `[[0, m], [conj(m), 0]]` contributing rank 2 and signature 0.
//! Sylvester's law of inertia makes the result independent of the pivot
//! order; pivots are taken first-come for determinism.

use num::BigInt;

use super::quad::QuadElement;
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix {
    n: usize,
    d: BigInt,
    entries: Vec<QuadElement>, // row major, n * n
}

impl HermitianMatrix {
    /// Validates squareness, a common field tag and conjugate symmetry
    /// (which forces a real diagonal).
    pub fn from_rows(rows: Vec<Vec<QuadElement>>) -> Result<Self, AlgebraError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::NonSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        let d = match rows.first().and_then(|r| r.first()) {
            Some(e) => e.field_tag().clone(),
            None => BigInt::from(1u32),
        };
        for row in &rows {
            for e in row {
                if *e.field_tag() != d {
                    return Err(AlgebraError::FieldMismatch(
                        d.clone(),
                        e.field_tag().clone(),
                    ));
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                if rows[i][j] != rows[j][i].conj() {
                    return Err(AlgebraError::NotHermitian(i, j));
                }
            }
        }
        let entries = rows.into_iter().flatten().collect();
        Ok(HermitianMatrix { n, d, entries })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn field_tag(&self) -> &BigInt {
        &self.d
    }

    pub fn entry(&self, i: usize, j: usize) -> &QuadElement {
        &self.entries[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(QuadElement::is_zero)
    }

    /// Exact (rank, signature): rank is the number of nonzero eigenvalues,
    /// signature the number of positive minus the number of negative ones,
    /// computed without ever leaving the field.
    pub fn rank_signature(&self) -> (usize, i64) {
        let n = self.n;
        let mut m = self.entries.clone();
        let at = |m: &Vec<QuadElement>, i: usize, j: usize| m[i * n + j].clone();
        let mut active: Vec<usize> = (0..n).collect();
        let mut rank = 0usize;
        let mut signature = 0i64;

        while !active.is_empty() {
            // real diagonal pivot, first come
            if let Some(pos) = active.iter().position(|&i| !m[i * n + i].is_zero()) {
                let p = active.remove(pos);
                let pivot = at(&m, p, p);
                signature += pivot.sign_real();
                rank += 1;
                for &i in &active {
                    for &j in &active {
                        let update = at(&m, i, p).mul(&at(&m, p, j)).div(&pivot);
                        m[i * n + j] = at(&m, i, j).sub(&update);
                    }
                }
                continue;
            }
            // zero diagonal: look for a hyperbolic block
            let mut block = None;
            'scan: for (a, &i) in active.iter().enumerate() {
                for &j in &active[a + 1..] {
                    if !m[i * n + j].is_zero() {
                        block = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((bi, bj)) = block else {
                break; // zero block terminates
            };
            rank += 2;
            let w = at(&m, bi, bj);
            let w_conj = w.conj();
            let norm = QuadElement::from_rational(w.norm(), self.d.clone());
            active.retain(|&i| i != bi && i != bj);
            for &k in &active {
                for &l in &active {
                    // Schur complement of [[0, w], [conj(w), 0]]
                    let t1 = at(&m, k, bj).mul(&w_conj).mul(&at(&m, bi, l));
                    let t2 = at(&m, k, bi).mul(&w).mul(&at(&m, bj, l));
                    let update = t1.add(&t2).div(&norm);
                    m[k * n + l] = at(&m, k, l).sub(&update);
                }
            }
        }
        (rank, signature)
    }
}
