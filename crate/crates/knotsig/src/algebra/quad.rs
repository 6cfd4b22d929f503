//! Elements `a + b*u` of an imaginary quadratic extension, `u^2 = -D`.
//!
//! Every element carries its field tag `D` (a positive integer). Elements
//! only combine when the tags agree; violating that is a caller bug and
//! panics. The [`HermitianMatrix`](super::HermitianMatrix) constructor is
//! the validation point that turns mixed tags into a recoverable error.

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use super::rational::{sign, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadElement {
    real: Rational,
    imag: Rational,
    d: BigInt,
}

impl QuadElement {
    /// `real + imag * u` in the field with `u^2 = -d`.
    pub fn new(real: Rational, imag: Rational, d: BigInt) -> Self {
        assert!(d.is_positive(), "field tag D must be positive");
        QuadElement { real, imag, d }
    }

    pub fn from_rational(real: Rational, d: BigInt) -> Self {
        QuadElement::new(real, Rational::zero(), d)
    }

    pub fn zero(d: BigInt) -> Self {
        QuadElement::from_rational(Rational::zero(), d)
    }

    pub fn one(d: BigInt) -> Self {
        QuadElement::from_rational(Rational::one(), d)
    }

    pub fn real(&self) -> &Rational {
        &self.real
    }

    /// Coefficient of `u`.
    pub fn imag(&self) -> &Rational {
        &self.imag
    }

    pub fn field_tag(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.real.is_zero() && self.imag.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.imag.is_zero()
    }

    fn check_tag(&self, rhs: &Self) {
        assert_eq!(
            self.d, rhs.d,
            "combined elements of Q(sqrt(-{})) and Q(sqrt(-{}))",
            self.d, rhs.d
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_tag(rhs);
        QuadElement {
            real: &self.real + &rhs.real,
            imag: &self.imag + &rhs.imag,
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_tag(rhs);
        QuadElement {
            real: &self.real - &rhs.real,
            imag: &self.imag - &rhs.imag,
            d: self.d.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_tag(rhs);
        let d_rat = Rational::from_integer(self.d.clone());
        QuadElement {
            real: &self.real * &rhs.real - &(&self.imag * &rhs.imag) * &d_rat,
            imag: &self.real * &rhs.imag + &self.imag * &rhs.real,
            d: self.d.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        QuadElement {
            real: -&self.real,
            imag: -&self.imag,
            d: self.d.clone(),
        }
    }

    /// Complex conjugate: `a + b*u -> a - b*u`.
    pub fn conj(&self) -> Self {
        QuadElement {
            real: self.real.clone(),
            imag: -&self.imag,
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        QuadElement {
            real: &self.real * s,
            imag: &self.imag * s,
            d: self.d.clone(),
        }
    }

    /// `|z|^2 = a^2 + D b^2`, a non-negative rational.
    pub fn norm(&self) -> Rational {
        let d_rat = Rational::from_integer(self.d.clone());
        &(&self.real * &self.real) + &(&(&self.imag * &self.imag) * &d_rat)
    }

    /// Exact division; panics on a zero divisor.
    pub fn div(&self, rhs: &Self) -> Self {
        self.check_tag(rhs);
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero field element");
        self.mul(&rhs.conj()).scale(&n.recip())
    }

    /// Sign of a real element; panics if the element is not real.
    pub fn sign_real(&self) -> i64 {
        assert!(self.is_real(), "sign of a non-real element");
        sign(&self.real)
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.imag.is_zero() {
            return write!(f, "{}", self.real);
        }
        if self.real.is_zero() {
            return write!(f, "{}*u", self.imag);
        }
        if self.imag.is_negative() {
            write!(f, "{} - {}*u", self.real, -&self.imag)
        } else {
            write!(f, "{} + {}*u", self.real, self.imag)
        }
    }
}
