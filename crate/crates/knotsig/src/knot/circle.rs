//! Exact points on the unit circle.
//!
//! A point omega is stored as its rational real part x = cos(theta)
//! together with the half plane carrying the sign of the imaginary part.
//! With x = p/q reduced, 1 - x^2 = (q^2 - p^2)/q^2, and writing
//! q^2 - p^2 = D s^2 with D square-free gives omega = x + (s/q) u for
//! u^2 = -D. That puts omega, and everything built from it, inside one
//! exact quadratic field. Points with x = +/-1 are real and get the
//! conventional tag D = 1.

use std::fmt;

use num::{BigInt, One, Zero};

use super::KnotError;
use crate::algebra::{extract_square_part, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfPlane {
    Upper,
    Lower,
    RealAxis,
}

impl HalfPlane {
    pub fn label(&self) -> &'static str {
        match self {
            HalfPlane::Upper => "upper",
            HalfPlane::Lower => "lower",
            HalfPlane::RealAxis => "real-axis",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirclePoint {
    x: Rational,
    half: HalfPlane,
    d: BigInt,
    /// Signed beta with Im(omega) = beta * sqrt(D); zero on the real axis.
    imag_coeff: Rational,
}

impl CirclePoint {
    fn build(x: Rational, lower: bool) -> Result<Self, KnotError> {
        let one = Rational::one();
        if x > one || x < -&one {
            return Err(KnotError::XOutOfRange(x));
        }
        let q = x.denom();
        let p = x.numer();
        let n = q * q - p * p;
        if n.is_zero() {
            return Ok(CirclePoint {
                x,
                half: HalfPlane::RealAxis,
                d: BigInt::one(),
                imag_coeff: Rational::zero(),
            });
        }
        let (d, s) = extract_square_part(&n);
        let magnitude = Rational::new(s, q.clone());
        let (half, imag_coeff) = if lower {
            (HalfPlane::Lower, -magnitude)
        } else {
            (HalfPlane::Upper, magnitude)
        };
        Ok(CirclePoint { x, half, d, imag_coeff })
    }

    /// Point with positive imaginary part (or on the real axis if x = +/-1).
    pub fn upper(x: Rational) -> Result<Self, KnotError> {
        CirclePoint::build(x, false)
    }

    /// Point with negative imaginary part (or on the real axis if x = +/-1).
    pub fn lower(x: Rational) -> Result<Self, KnotError> {
        CirclePoint::build(x, true)
    }

    /// omega = 1.
    pub fn one() -> Self {
        CirclePoint::build(Rational::one(), false).unwrap()
    }

    /// omega = -1.
    pub fn minus_one() -> Self {
        CirclePoint::build(-Rational::one(), false).unwrap()
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn half(&self) -> HalfPlane {
        self.half
    }

    /// The square-free D with omega in Q(u), u^2 = -D.
    pub fn field_tag(&self) -> &BigInt {
        &self.d
    }

    /// Signed coefficient of u in omega.
    pub fn imag_coeff(&self) -> &Rational {
        &self.imag_coeff
    }

    pub fn is_real(&self) -> bool {
        self.half == HalfPlane::RealAxis
    }

    pub fn conjugate(&self) -> Self {
        let half = match self.half {
            HalfPlane::Upper => HalfPlane::Lower,
            HalfPlane::Lower => HalfPlane::Upper,
            HalfPlane::RealAxis => HalfPlane::RealAxis,
        };
        CirclePoint {
            x: self.x.clone(),
            half,
            d: self.d.clone(),
            imag_coeff: -&self.imag_coeff,
        }
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.half {
            HalfPlane::RealAxis => write!(f, "omega = {}", self.x),
            _ => write!(f, "x = {} ({} half)", self.x, self.half.label()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn sixth_root_of_unity() {
        // x = 1/2: q^2 - p^2 = 3, so D = 3 and Im = (1/2) sqrt(3)
        let w = CirclePoint::upper(rat(1, 2)).unwrap();
        assert_eq!(*w.field_tag(), BigInt::from(3));
        assert_eq!(*w.imag_coeff(), rat(1, 2));
        assert_eq!(w.half(), HalfPlane::Upper);
        assert_eq!(w.to_string(), "x = 1/2 (upper half)");
    }

    #[test]
    fn gaussian_point() {
        // x = 3/5: 25 - 9 = 16 = 1 * 4^2, so D = 1 and omega = 3/5 + (4/5) i
        let w = CirclePoint::lower(rat(3, 5)).unwrap();
        assert_eq!(*w.field_tag(), BigInt::one());
        assert_eq!(*w.imag_coeff(), rat(-4, 5));
    }

    #[test]
    fn real_axis_normalization() {
        let w = CirclePoint::lower(rat(1, 1)).unwrap();
        assert!(w.is_real());
        assert_eq!(w.half(), HalfPlane::RealAxis);
        assert!(w.imag_coeff().is_zero());
        assert_eq!(CirclePoint::minus_one().to_string(), "omega = -1");
    }

    #[test]
    fn conjugation_flips_half() {
        let w = CirclePoint::upper(rat(1, 3)).unwrap();
        let c = w.conjugate();
        assert_eq!(c.half(), HalfPlane::Lower);
        assert_eq!(c.imag_coeff(), &-w.imag_coeff());
        assert_eq!(c.conjugate(), w);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            CirclePoint::upper(rat(3, 2)),
            Err(KnotError::XOutOfRange(_))
        ));
        assert!(matches!(
            CirclePoint::lower(rat(-9, 8)),
            Err(KnotError::XOutOfRange(_))
        ));
    }
}
