//! Dense integer polynomials, coefficients stored lowest degree first.
//!
//! Invariant: the coefficient vector is empty for the zero polynomial and
//! otherwise ends with a nonzero leading coefficient. Arithmetic is
//! arbitrary precision throughout. Internal divisions (Bareiss pivots,
//! square-free splitting) are exact; a failed exact division means a broken
//! invariant, not bad input, and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use super::rational::Rational;
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// Builds from coefficients, lowest degree first, trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * t^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_positive(&self) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    /// `self * c * t^shift`.
    fn mul_monomial(&self, c: &BigInt, shift: usize) -> Self {
        if c.is_zero() || self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        IntPolynomial { coeffs }
    }

    /// Index of the lowest nonzero coefficient; None for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides by `t^j`; panics if `t^j` does not divide.
    pub fn shift_down(&self, j: usize) -> Self {
        assert!(
            self.coeffs.iter().take(j).all(Zero::is_zero),
            "polynomial not divisible by t^{j}"
        );
        IntPolynomial {
            coeffs: self.coeffs.iter().skip(j).cloned().collect(),
        }
    }

    /// `t^deg * p(1/t)`: the coefficient sequence reversed.
    pub fn reversed(&self) -> Self {
        IntPolynomial::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    /// Exact quotient `self / divisor`, or None when the division is not
    /// exact over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let d_deg = divisor.degree().unwrap();
        let d_lc = divisor.leading_coeff();
        let deg = self.degree().unwrap();
        if deg < d_deg {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); deg - d_deg + 1];
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                return None;
            }
            let (q, r) = rem.leading_coeff().div_rem(&d_lc);
            if !r.is_zero() {
                return None;
            }
            quot[r_deg - d_deg] = q.clone();
            rem = &rem - &divisor.mul_monomial(&q, r_deg - d_deg);
        }
        Some(IntPolynomial::from_coeffs(quot))
    }

    /// Pseudo-remainder: `self` scaled by powers of `divisor`'s leading
    /// coefficient until long division stays integral. The sign of the
    /// result is not meaningful; callers normalize.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let d_deg = divisor.degree().expect("pseudo_rem by zero");
        let d_lc = divisor.leading_coeff();
        let mut rem = self.clone();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let r_lc = rem.leading_coeff();
            rem = &rem.mul_scalar(&d_lc) - &divisor.mul_monomial(&r_lc, r_deg - d_deg);
        }
        rem
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_positive();
            a = b;
            b = r;
        }
        a
    }

    /// `self / gcd(self, self')`, primitive with positive leading
    /// coefficient: same roots, all simple.
    pub fn squarefree_part(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let q = self
            .div_exact(&g)
            .expect("gcd divides the polynomial");
        Ok(q.primitive_positive())
    }

    /// Yun decomposition: pairwise-coprime primitive factors with their
    /// multiplicities, so that `self = c * prod f_i^(m_i)`. Constants give
    /// an empty list.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let f = self.primitive_positive();
        match f.degree() {
            None | Some(0) => return Vec::new(),
            _ => {}
        }
        let df = f.derivative();
        let g = f.gcd(&df);
        if g.degree() == Some(0) {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut w = f.div_exact(&g).expect("gcd divides f");
        let mut y = df.div_exact(&g).expect("gcd divides f'");
        let mut multiplicity = 1;
        loop {
            let z = &y - &w.derivative();
            if z.is_zero() {
                if w.degree().map_or(false, |d| d >= 1) {
                    out.push((w, multiplicity));
                }
                break;
            }
            let a = w.gcd(&z);
            if a.degree().map_or(false, |d| d >= 1) {
                out.push((a.clone(), multiplicity));
            }
            w = w.div_exact(&a).expect("Yun factor divides w");
            y = z.div_exact(&a).expect("Yun factor divides z");
            multiplicity += 1;
        }
        out
    }

    /// All rational roots, sorted, found by the rational root theorem on
    /// the primitive part. Returns None when a coefficient is too composite
    /// to enumerate divisors for, in which case no completeness claim can
    /// be made.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        if self.is_zero() {
            return None;
        }
        let val = self.valuation().unwrap();
        let p = self.shift_down(val).primitive_positive();
        let mut roots = Vec::new();
        if val > 0 {
            roots.push(Rational::zero());
        }
        if p.degree() == Some(0) {
            roots.sort();
            return Some(roots);
        }
        let numers = divisors(&p.constant_term().abs())?;
        let denoms = divisors(&p.leading_coeff().abs())?;
        for n in &numers {
            for d in &denoms {
                for cand in [
                    Rational::new(n.clone(), d.clone()),
                    Rational::new(-n.clone(), d.clone()),
                ] {
                    if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if i > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Exact determinant of a square matrix of polynomials by fraction-free
/// (Bareiss) elimination. The empty matrix has determinant 1.
pub fn polynomial_det(rows: &[Vec<IntPolynomial>]) -> Result<IntPolynomial, AlgebraError> {
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
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let mut m = rows.to_vec();
    let mut negate = false;
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(IntPolynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = IntPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { (&det).neg() } else { det })
}

/// All positive divisors of `n > 0`, or None when trial division cannot
/// finish under the bound or the divisor count explodes.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const MAX_DIVISORS: usize = 4096;
    let mut rest = n.clone();
    let mut out = vec![BigInt::one()];
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(super::rational::TRIAL_LIMIT);
    while &d * &d <= rest && d <= limit {
        if (&rest % &d).is_zero() {
            let mut power = BigInt::one();
            let mut extended = Vec::new();
            while (&rest % &d).is_zero() {
                rest /= &d;
                power *= &d;
                extended.extend(out.iter().map(|v| v * &power));
            }
            out.append(&mut extended);
            if out.len() > MAX_DIVISORS {
                return None;
            }
        }
        d += if d == BigInt::from(2u32) {
            BigInt::one()
        } else {
            BigInt::from(2u32)
        };
    }
    if &d * &d <= rest {
        return None; // a factor beyond the trial bound may be composite
    }
    if rest > BigInt::one() {
        let more: Vec<BigInt> = out.iter().map(|v| v * &rest).collect();
        out.extend(more);
    }
    if out.len() > MAX_DIVISORS {
        return None;
    }
    Some(out)
}
