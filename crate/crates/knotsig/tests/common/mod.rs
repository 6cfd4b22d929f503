//! Shared test helpers: the floating-point eigenvalue oracle on the
//! complex embedding, and deterministic random generators for Hermitian
//! and Seifert matrices. The oracle is independent of the exact pipeline
//! it cross-checks.
#![allow(dead_code)] // each test target uses a different subset

use knotsig::{HermitianMatrix, QuadElement, Rational, SeifertMatrix};
use nalgebra::{Complex, DMatrix};
use num::{BigInt, ToPrimitive};
use rand::Rng;

/// Complex embedding of a Hermitian matrix over u^2 = -D: u maps to
/// i sqrt(D).
pub fn to_complex(m: &HermitianMatrix) -> DMatrix<Complex<f64>> {
    let n = m.dimension();
    let sqrt_d = m.field_tag().to_f64().expect("small field tag").sqrt();
    DMatrix::from_fn(n, n, |i, j| {
        let e = m.entry(i, j);
        Complex::new(
            e.real().to_f64().expect("finite entry"),
            e.imag().to_f64().expect("finite entry") * sqrt_d,
        )
    })
}

/// (rank, signature) from floating-point eigenvalue signs, or None when
/// some eigenvalue magnitude falls into the ambiguous band between the
/// zero threshold and the trust threshold; callers redraw the sample.
pub fn float_rank_signature(m: &HermitianMatrix) -> Option<(usize, i64)> {
    if m.dimension() == 0 {
        return Some((0, 0));
    }
    let c = to_complex(m);
    let scale = c.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
    let zero_tol = 1e-9 * scale;
    let trust_tol = 1e-5 * scale;
    let mut pos = 0usize;
    let mut neg = 0usize;
    for ev in c.symmetric_eigenvalues().iter() {
        let mag = ev.abs();
        if mag >= trust_tol {
            if *ev > 0.0 {
                pos += 1;
            } else {
                neg += 1;
            }
        } else if mag > zero_tol {
            return None;
        }
    }
    Some((pos + neg, pos as i64 - neg as i64))
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let numer = rng.gen_range(-4i64..=4);
    let denom = rng.gen_range(1i64..=3);
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

fn random_quad(rng: &mut impl Rng, d: &BigInt) -> QuadElement {
    QuadElement::new(random_rational(rng), random_rational(rng), d.clone())
}

/// Random Hermitian matrix over u^2 = -d. Two thirds are generic (small
/// rational entries), one third are built as C* J C with fewer rows than
/// columns, forcing rank deficiency.
pub fn random_hermitian(rng: &mut impl Rng, n: usize, d: i64) -> HermitianMatrix {
    let d = BigInt::from(d);
    if n >= 2 && rng.gen_range(0..3) == 0 {
        let k = rng.gen_range(1..n);
        let c: Vec<Vec<QuadElement>> = (0..k)
            .map(|_| (0..n).map(|_| random_quad(rng, &d)).collect())
            .collect();
        let signs: Vec<i64> = (0..k).map(|_| if rng.gen() { 1 } else { -1 }).collect();
        let rows: Vec<Vec<QuadElement>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = QuadElement::zero(d.clone());
                        for (r, sign) in signs.iter().enumerate() {
                            let term = c[r][i].conj().mul(&c[r][j]);
                            acc = if *sign > 0 { acc.add(&term) } else { acc.sub(&term) };
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        return HermitianMatrix::from_rows(rows).expect("C* J C is Hermitian");
    }
    let mut rows = vec![vec![QuadElement::zero(d.clone()); n]; n];
    for i in 0..n {
        rows[i][i] = QuadElement::from_rational(random_rational(rng), d.clone());
        for j in i + 1..n {
            let e = random_quad(rng, &d);
            rows[j][i] = e.conj();
            rows[i][j] = e;
        }
    }
    HermitianMatrix::from_rows(rows).expect("mirrored entries are Hermitian")
}

/// Random Seifert matrix rows: a random symmetric integer matrix plus the
/// upper half of the standard symplectic form, so A - A^T is exactly the
/// symplectic form and det(A - A^T) = 1.
pub fn random_seifert_rows(rng: &mut impl Rng, genus: usize) -> Vec<Vec<i64>> {
    let n = 2 * genus;
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        rows[i][i] = rng.gen_range(-3..=3);
        for j in i + 1..n {
            let v = rng.gen_range(-3..=3);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    for g in 0..genus {
        rows[2 * g][2 * g + 1] += 1;
    }
    rows
}

pub fn random_seifert(rng: &mut impl Rng, genus: usize) -> SeifertMatrix {
    SeifertMatrix::from_rows(random_seifert_rows(rng, genus))
        .expect("symplectic skew part is unimodular")
}

/// Extracts the entries of a Hermitian matrix as rows for mutation.
pub fn rows_of(m: &HermitianMatrix) -> Vec<Vec<QuadElement>> {
    let n = m.dimension();
    (0..n)
        .map(|i| (0..n).map(|j| m.entry(i, j).clone()).collect())
        .collect()
}

/// Applies a random congruence P* M P with P a product of integer
/// unimodular elementary matrices: transvections, swaps and negations.
pub fn random_integer_congruence(
    rng: &mut impl Rng,
    m: &HermitianMatrix,
) -> HermitianMatrix {
    let n = m.dimension();
    let d = m.field_tag().clone();
    let mut rows = rows_of(m);
    if n < 2 {
        return m.clone();
    }
    for _ in 0..10 {
        match rng.gen_range(0..3) {
            0 => {
                // col_j += lambda col_i, row_j += lambda row_i
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                while j == i {
                    j = rng.gen_range(0..n);
                }
                let lambda = QuadElement::from_rational(
                    Rational::from_integer(BigInt::from(rng.gen_range(-2i64..=2))),
                    d.clone(),
                );
                for k in 0..n {
                    rows[k][j] = rows[k][j].add(&rows[k][i].mul(&lambda));
                }
                for l in 0..n {
                    rows[j][l] = rows[j][l].add(&lambda.conj().mul(&rows[i][l]));
                }
            }
            1 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                while j == i {
                    j = rng.gen_range(0..n);
                }
                for row in rows.iter_mut() {
                    row.swap(i, j);
                }
                rows.swap(i, j);
            }
            _ => {
                let i = rng.gen_range(0..n);
                for k in 0..n {
                    rows[k][i] = rows[k][i].neg();
                }
                for l in 0..n {
                    rows[i][l] = rows[i][l].neg();
                }
            }
        }
    }
    HermitianMatrix::from_rows(rows).expect("congruence preserves Hermitian structure")
}
