//! The Levine-Tristram form (1-omega)A + (1-conj(omega))A^T and the trace
//! polynomial that moves its jump locations onto the real line.

use num::{BigInt, One, Zero};

use super::circle::CirclePoint;
use super::seifert::SeifertMatrix;
use super::KnotError;
use crate::algebra::{HermitianMatrix, IntPolynomial, QuadElement, Rational};

/// Assembles M(omega) = (1-omega)A + (1-conj(omega))A^T exactly over
/// Q(u), u^2 = -D(omega). Hermitian by construction.
pub fn signature_matrix(a: &SeifertMatrix, omega: &CirclePoint) -> HermitianMatrix {
    let d = omega.field_tag().clone();
    let one_minus = QuadElement::new(
        Rational::one() - omega.x(),
        -omega.imag_coeff(),
        d,
    );
    let one_minus_conj = one_minus.conj();
    let n = a.dimension();
    let rows: Vec<Vec<QuadElement>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let fwd = Rational::from_integer(a.entry(i, j).clone());
                    let bwd = Rational::from_integer(a.entry(j, i).clone());
                    one_minus.scale(&fwd).add(&one_minus_conj.scale(&bwd))
                })
                .collect()
        })
        .collect();
    HermitianMatrix::from_rows(rows).expect("Levine-Tristram form is Hermitian")
}

/// Exact (rank, signature) of the Levine-Tristram form at omega.
pub fn levine_tristram_at(a: &SeifertMatrix, omega: &CirclePoint) -> (usize, i64) {
    signature_matrix(a, omega).rank_signature()
}

/// Rewrites the unit-circle roots of a reciprocal polynomial as real roots
/// in x = cos(theta): returns P with P(cos theta) = 0 iff
/// delta(e^(i theta)) = 0 for theta in (0, pi). Roots at t = +/-1 are
/// divided out first (their angles are the endpoints theta = 0, pi, which
/// callers handle by direct evaluation).
pub fn trace_polynomial(delta: &IntPolynomial) -> Result<IntPolynomial, KnotError> {
    if delta.is_zero() {
        return Err(KnotError::Algebra(
            crate::algebra::AlgebraError::ZeroPolynomial,
        ));
    }
    let reversed = delta.reversed();
    let negated = IntPolynomial::from_coeffs(delta.coeffs().iter().map(|c| -c).collect());
    if reversed != *delta && reversed != negated {
        return Err(KnotError::NotReciprocal);
    }

    let one = BigInt::one();
    let minus_one = BigInt::from(-1);
    let t_minus_1 = IntPolynomial::from_i64(&[-1, 1]);
    let t_plus_1 = IntPolynomial::from_i64(&[1, 1]);
    let mut p = delta.clone();
    while p.eval_int(&one).is_zero() {
        p = p.div_exact(&t_minus_1).expect("root at t = 1 divides");
    }
    while p.eval_int(&minus_one).is_zero() {
        p = p.div_exact(&t_plus_1).expect("root at t = -1 divides");
    }

    // with the +/-1 roots removed a reciprocal polynomial is +symmetric of
    // even degree; anything else means the input was not reciprocal
    let deg = p.degree().expect("nonzero");
    if p.reversed() != p || deg % 2 != 0 {
        return Err(KnotError::NotReciprocal);
    }
    let half = deg / 2;

    // delta(t)/t^half = c_half + sum_j c_(half+j) (t^j + t^-j) and
    // t^j + t^-j = p_j(2x) with p_0 = 2, p_1 = z, p_(j+1) = z p_j - p_(j-1)
    let two_x = IntPolynomial::from_i64(&[0, 2]);
    let mut result = IntPolynomial::constant(p.coeff(half));
    let mut prev = IntPolynomial::from_i64(&[2]);
    let mut cur = two_x.clone();
    for j in 1..=half {
        result = &result + &cur.mul_scalar(&p.coeff(half + j));
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::from_rows(vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    #[test]
    fn matrix_at_omega_one_vanishes() {
        let m = signature_matrix(&trefoil(), &CirclePoint::one());
        assert!(m.is_zero());
        assert_eq!(levine_tristram_at(&trefoil(), &CirclePoint::one()), (0, 0));
    }

    #[test]
    fn matrix_at_minus_one_is_twice_symmetrization() {
        // 2(A + A^T) for the trefoil: [[-4, 2], [2, -4]], eigenvalues -2, -6
        let m = signature_matrix(&trefoil(), &CirclePoint::minus_one());
        assert_eq!(*m.entry(0, 0).real(), rat(-4, 1));
        assert_eq!(*m.entry(0, 1).real(), rat(2, 1));
        assert!(m.entry(0, 1).is_real());
        assert_eq!(levine_tristram_at(&trefoil(), &CirclePoint::minus_one()), (2, -2));
    }

    #[test]
    fn trefoil_at_sixth_root() {
        // (1-omega) + (1-conj(omega)) = 2 - 2x = 1 at x = 1/2, so the
        // diagonal is (-1, -1) over u^2 = -3
        let w = CirclePoint::upper(rat(1, 2)).unwrap();
        let m = signature_matrix(&trefoil(), &w);
        assert_eq!(*m.field_tag(), num::BigInt::from(3));
        assert_eq!(*m.entry(0, 0).real(), rat(-1, 1));
        assert_eq!(*m.entry(1, 1).real(), rat(-1, 1));
        assert_eq!(*m.entry(0, 1).real(), rat(1, 2));
        assert_eq!(*m.entry(0, 1).imag(), rat(-1, 2));
        // Delta vanishes here: the form is singular
        assert_eq!(levine_tristram_at(&trefoil(), &w), (1, -1));
    }

    #[test]
    fn trace_of_trefoil_alexander() {
        // t^2 - t + 1 -> 2x - 1
        assert_eq!(trace_polynomial(&poly(&[1, -1, 1])).unwrap(), poly(&[-1, 2]));
    }

    #[test]
    fn trace_of_squared_alexander() {
        // (t^2 - t + 1)^2 -> (2x - 1)^2
        let squared = &poly(&[1, -1, 1]) * &poly(&[1, -1, 1]);
        assert_eq!(trace_polynomial(&squared).unwrap(), poly(&[1, -4, 4]));
    }

    #[test]
    fn trace_of_constant() {
        assert_eq!(trace_polynomial(&poly(&[1])).unwrap(), poly(&[1]));
    }

    #[test]
    fn trace_divides_out_unit_roots() {
        // t^3 + 1 = (t + 1)(t^2 - t + 1) -> 2x - 1
        assert_eq!(trace_polynomial(&poly(&[1, 0, 0, 1])).unwrap(), poly(&[-1, 2]));
        // t^2 - 1 is anti-reciprocal with only unit roots -> constant
        assert_eq!(trace_polynomial(&poly(&[-1, 0, 1])).unwrap(), poly(&[1]));
    }

    #[test]
    fn trace_of_tenth_cyclotomic() {
        // t^4 - t^3 + t^2 - t + 1 -> 4x^2 - 2x - 1, roots cos(pi/5), cos(3pi/5)
        assert_eq!(
            trace_polynomial(&poly(&[1, -1, 1, -1, 1])).unwrap(),
            poly(&[-1, -2, 4])
        );
    }

    #[test]
    fn non_reciprocal_rejected() {
        assert_eq!(
            trace_polynomial(&poly(&[1, 2])).unwrap_err(),
            KnotError::NotReciprocal
        );
    }
}
