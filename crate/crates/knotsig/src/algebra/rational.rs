//! Rational scalars and square-part extraction for integers.
//!
//! Rationals are `num::BigRational`: always reduced, denominator always
//! positive, so sign tests are a look at the numerator. Everything downstream
//! (field elements, Sturm chains, circle points) builds on these.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational scalar, reduced with positive denominator.
pub type Rational = BigRational;

/// Shorthand for a rational from an integer pair.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign(r: &Rational) -> i64 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Trial divisors are capped here; beyond the cap a perfect-square check
/// still catches the common large remainders.
pub(crate) const TRIAL_LIMIT: u64 = 1 << 20;

/// Writes `n > 0` as `d * s^2` with every square factor moved into `s`.
///
/// Factors are found by trial division below 2^20 followed by a
/// perfect-square check on the remainder, which is complete for any input
/// whose second-largest prime factor fits under the trial bound.
pub fn extract_square_part(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "square part extraction needs n > 0");
    let mut rest = n.clone();
    let mut free = BigInt::one();
    let mut root = BigInt::one();
    let mut divisor = BigInt::from(2u32);
    let limit = BigInt::from(TRIAL_LIMIT);
    while &divisor * &divisor <= rest && divisor <= limit {
        if (&rest % &divisor).is_zero() {
            let mut multiplicity = 0u32;
            while (&rest % &divisor).is_zero() {
                rest /= &divisor;
                multiplicity += 1;
            }
            if multiplicity % 2 == 1 {
                free *= &divisor;
            }
            root *= divisor.pow(multiplicity / 2);
        }
        divisor += if divisor == BigInt::from(2u32) {
            BigInt::one()
        } else {
            BigInt::from(2u32)
        };
    }
    if rest > BigInt::one() {
        let s = rest.sqrt();
        if &s * &s == rest {
            root *= s;
        } else {
            free *= rest;
        }
    }
    (free, root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(n: i64, d: i64, s: i64) {
        let (free, root) = extract_square_part(&BigInt::from(n));
        assert_eq!((free, root), (BigInt::from(d), BigInt::from(s)), "n = {n}");
    }

    #[test]
    fn square_parts() {
        check(1, 1, 1);
        check(3, 3, 1);
        check(4, 1, 2);
        check(12, 3, 2);
        check(16, 1, 4);
        check(360, 10, 6);
        check(9_999_999, 1_111_111, 3);
    }

    #[test]
    fn large_prime_square_remainder() {
        // (2^31 - 1)^2 has no factor under the trial bound; the square check
        // must still clear it.
        let p = BigInt::from(2_147_483_647u64);
        let (free, root) = extract_square_part(&(&p * &p));
        assert_eq!(free, BigInt::one());
        assert_eq!(root, p);
    }

    #[test]
    fn rational_display_is_lowest_terms() {
        assert_eq!(rat(2, 4).to_string(), "1/2");
        assert_eq!(rat(-3, -6).to_string(), "1/2");
        assert_eq!(rat(5, 1).to_string(), "5");
        assert_eq!(sign(&rat(-1, 7)), -1);
        assert_eq!(sign(&rat(0, 7)), 0);
    }
}
