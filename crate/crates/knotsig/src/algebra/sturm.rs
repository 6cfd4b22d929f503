//! Sturm-sequence real root isolation with exact rational interval
//! endpoints.
//!
//! Isolation runs on the square-free part, so every interval holds exactly
//! one distinct root; multiplicities come from the Yun decomposition.
//! Invariants maintained throughout: emitted intervals are open, pairwise
//! disjoint, sorted, lie inside the query range, and none of their
//! endpoints is a root of the polynomial. Intervals are refined below a
//! width parameter (default 1/64).

use num::{One, Signed, Zero};

use super::poly::IntPolynomial;
use super::rational::{rat, Rational};
use super::AlgebraError;

/// Open interval `(lo, hi)` containing exactly one distinct real root of
/// the isolated polynomial, tagged with that root's multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

impl IsolatingInterval {
    fn new(lo: Rational, hi: Rational, multiplicity: usize) -> Self {
        assert!(lo < hi, "empty isolating interval");
        IsolatingInterval { lo, hi, multiplicity }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo < *x && *x < self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Divide by the (positive) content, keeping the sign of the polynomial.
fn primitive_keep_sign(p: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() {
        return IntPolynomial::zero();
    }
    let c = p.content();
    IntPolynomial::from_coeffs(p.coeffs().iter().map(|a| a / &c).collect())
}

/// Remainder of `f` by `g` over the rationals, rescaled by a positive
/// rational to a primitive integer polynomial. Positive scaling keeps the
/// Sturm sign structure intact.
fn scaled_remainder(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    let to_rat = |p: &IntPolynomial| -> Vec<Rational> {
        p.coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    };
    let mut rem = to_rat(f);
    let div = to_rat(g);
    let d_deg = div.len() - 1;
    let d_lc = div.last().expect("nonzero divisor").clone();
    while rem.len() > d_deg {
        let shift = rem.len() - 1 - d_deg;
        let factor = rem.last().unwrap() / &d_lc;
        for (i, c) in div.iter().enumerate() {
            let cur = &rem[shift + i] - &(&factor * c);
            rem[shift + i] = cur;
        }
        while rem.last().map_or(false, Zero::is_zero) {
            rem.pop();
        }
    }
    if rem.is_empty() {
        return IntPolynomial::zero();
    }
    // clear denominators with a positive factor, then strip the content
    let mut lcm = num::BigInt::one();
    for c in &rem {
        lcm = num::Integer::lcm(&lcm, c.denom());
    }
    let ints: Vec<num::BigInt> = rem
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    primitive_keep_sign(&IntPolynomial::from_coeffs(ints))
}

/// Sturm chain of a square-free polynomial.
struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    fn new(squarefree: &IntPolynomial) -> Self {
        assert!(!squarefree.is_zero());
        let p0 = primitive_keep_sign(squarefree);
        let p1 = primitive_keep_sign(&squarefree.derivative());
        let mut chain = vec![p0];
        if !p1.is_zero() {
            chain.push(p1);
            loop {
                let r = scaled_remainder(&chain[chain.len() - 2], &chain[chain.len() - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(IntPolynomial::from_coeffs(
                    r.coeffs().iter().map(|c| -c).collect(),
                ));
            }
        }
        SturmChain { chain }
    }

    fn sign_variations(&self, x: &Rational) -> usize {
        let mut variations = 0;
        let mut last: i64 = 0;
        for p in &self.chain {
            let v = super::rational::sign(&p.eval(x));
            if v == 0 {
                continue;
            }
            if last != 0 && v != last {
                variations += 1;
            }
            last = v;
        }
        variations
    }

    /// Number of distinct roots in `(lo, hi]`.
    fn count_half_open(&self, lo: &Rational, hi: &Rational) -> usize {
        debug_assert!(lo < hi);
        let a = self.sign_variations(lo);
        let b = self.sign_variations(hi);
        debug_assert!(a >= b, "Sturm variation count must not increase");
        a - b
    }
}

/// Default refinement width, 1/64.
pub fn default_isolation_width() -> Rational {
    rat(1, 64)
}

/// Isolates the distinct real roots of `p` in the open interval
/// `(lo, hi)`, refining every interval below width 1/64.
pub fn sturm_isolate(
    p: &IntPolynomial,
    lo: &Rational,
    hi: &Rational,
) -> Result<Vec<IsolatingInterval>, AlgebraError> {
    sturm_isolate_with_width(p, lo, hi, &default_isolation_width())
}

/// As [`sturm_isolate`] with a caller-chosen maximum interval width.
pub fn sturm_isolate_with_width(
    p: &IntPolynomial,
    lo: &Rational,
    hi: &Rational,
    max_width: &Rational,
) -> Result<Vec<IsolatingInterval>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    assert!(max_width.is_positive(), "refinement width must be positive");
    if lo >= hi {
        return Ok(Vec::new());
    }
    let squarefree = p.squarefree_part()?;
    if squarefree.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&squarefree);

    // The half-open count includes the right end; if the query's upper end
    // is itself a root, retreat to a non-root cutoff with nothing between.
    let mut work_hi = hi.clone();
    if squarefree.eval(hi).is_zero() {
        let mut delta = (hi - lo) / rat(2, 1);
        loop {
            let c = hi - &delta;
            if !squarefree.eval(&c).is_zero() && chain.count_half_open(&c, hi) == 1 {
                work_hi = c;
                break;
            }
            delta /= rat(2, 1);
        }
    }
    if *lo >= work_hi {
        return Ok(Vec::new());
    }

    let mut positions: Vec<(Rational, Rational)> = Vec::new();
    let mut cells = vec![(lo.clone(), work_hi)];
    while let Some((a, b)) = cells.pop() {
        match chain.count_half_open(&a, &b) {
            0 => {}
            1 => positions.push(refine_cell(&chain, &squarefree, a, b, max_width)),
            _ => {
                let mid = (&a + &b) / rat(2, 1);
                if squarefree.eval(&mid).is_zero() {
                    let cap = min_rat(
                        min_rat((&mid - &a) / rat(2, 1), (&b - &mid) / rat(2, 1)),
                        max_width / rat(4, 1),
                    );
                    let (cl, ch) = carve(&chain, &squarefree, &mid, cap);
                    cells.push((a, cl.clone()));
                    cells.push((ch.clone(), b));
                    positions.push((cl, ch));
                } else {
                    cells.push((a, mid.clone()));
                    cells.push((mid, b));
                }
            }
        }
    }
    positions.sort_by(|x, y| x.0.cmp(&y.0));
    debug_assert!(positions.windows(2).all(|w| w[0].1 <= w[1].0));

    Ok(attach_multiplicities(p, positions))
}

fn min_rat(a: Rational, b: Rational) -> Rational {
    if a <= b {
        a
    } else {
        b
    }
}

/// Shrinks a symmetric window around a known root `center` until it
/// isolates it and has non-root endpoints.
fn carve(
    chain: &SturmChain,
    squarefree: &IntPolynomial,
    center: &Rational,
    mut w: Rational,
) -> (Rational, Rational) {
    loop {
        let lo = center - &w;
        let hi = center + &w;
        if !squarefree.eval(&lo).is_zero() && chain.count_half_open(&lo, &hi) == 1 {
            return (lo, hi);
        }
        w /= rat(2, 1);
    }
}

/// Bisection refinement of a cell `(a, b]` known to hold exactly one
/// distinct root. Cell right ends are never roots by construction; the
/// left end can be the original query bound, which bisection walks off.
fn refine_cell(
    chain: &SturmChain,
    squarefree: &IntPolynomial,
    mut a: Rational,
    mut b: Rational,
    max_width: &Rational,
) -> (Rational, Rational) {
    debug_assert!(!squarefree.eval(&b).is_zero());
    loop {
        if &(&b - &a) < max_width && !squarefree.eval(&a).is_zero() {
            return (a, b);
        }
        let mid = (&a + &b) / rat(2, 1);
        if squarefree.eval(&mid).is_zero() {
            let cap = min_rat(
                min_rat((&mid - &a) / rat(2, 1), (&b - &mid) / rat(2, 1)),
                max_width / rat(4, 1),
            );
            return carve(chain, squarefree, &mid, cap);
        }
        if chain.count_half_open(&a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
}

/// Tags each interval with the multiplicity of its root, read off the Yun
/// decomposition of the original polynomial.
fn attach_multiplicities(
    p: &IntPolynomial,
    positions: Vec<(Rational, Rational)>,
) -> Vec<IsolatingInterval> {
    if positions.is_empty() {
        return Vec::new();
    }
    let decomposition = p.squarefree_decomposition();
    if decomposition.len() == 1 {
        let m = decomposition[0].1;
        return positions
            .into_iter()
            .map(|(lo, hi)| IsolatingInterval::new(lo, hi, m))
            .collect();
    }
    let chains: Vec<(SturmChain, usize)> = decomposition
        .iter()
        .map(|(factor, m)| (SturmChain::new(factor), *m))
        .collect();
    positions
        .into_iter()
        .map(|(lo, hi)| {
            let m = chains
                .iter()
                .find(|(chain, _)| chain.count_half_open(&lo, &hi) == 1)
                .map(|(_, m)| *m)
                .expect("every isolated root belongs to one square-free factor");
            IsolatingInterval::new(lo, hi, m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    fn isolate(poly: &IntPolynomial, lo: i64, hi: i64) -> Vec<IsolatingInterval> {
        sturm_isolate(poly, &rat_int(lo), &rat_int(hi)).unwrap()
    }

    #[test]
    fn linear_root() {
        let ivs = isolate(&p(&[-1, 2]), -2, 2); // 2x - 1
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&rat(1, 2)));
        assert_eq!(ivs[0].multiplicity, 1);
        assert!(ivs[0].width() < rat(1, 64));
    }

    #[test]
    fn sqrt_two_pair() {
        let ivs = isolate(&p(&[-2, 0, 1]), -2, 2); // x^2 - 2
        assert_eq!(ivs.len(), 2);
        // each interval straddles a simple root: sign change across it
        for iv in &ivs {
            let f = p(&[-2, 0, 1]);
            assert!((f.eval(&iv.lo) * f.eval(&iv.hi)).is_negative());
            assert!(iv.width() < rat(1, 64));
        }
        assert!(ivs[0].hi <= ivs[1].lo);
        assert!(ivs[0].contains(&rat(-1414214, 1000000)) || ivs[0].contains(&rat(-14142, 10000)));
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate(&p(&[1, 0, 1]), -2, 2).is_empty()); // x^2 + 1
        assert!(matches!(
            sturm_isolate(&IntPolynomial::zero(), &rat_int(-1), &rat_int(1)),
            Err(AlgebraError::ZeroPolynomial)
        ));
    }

    #[test]
    fn endpoints_excluded() {
        // x(x - 1) on (0, 1): both roots sit on the boundary
        let f = &p(&[0, 1]) * &p(&[-1, 1]);
        assert!(sturm_isolate(&f, &rat_int(0), &rat_int(1)).unwrap().is_empty());
        // on (-1/2, 1): only the root at 0 is interior
        let ivs = sturm_isolate(&f, &rat(-1, 2), &rat_int(1)).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&Rational::zero()));
    }

    #[test]
    fn multiplicities_from_decomposition() {
        // (2x - 1)^2 (x + 2)
        let f = &(&p(&[-1, 2]) * &p(&[-1, 2])) * &p(&[2, 1]);
        let ivs = isolate(&f, -3, 3);
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&rat_int(-2)));
        assert_eq!(ivs[0].multiplicity, 1);
        assert!(ivs[1].contains(&rat(1, 2)));
        assert_eq!(ivs[1].multiplicity, 2);
    }

    #[test]
    fn double_root_alone() {
        // (2x - 1)^2: one interval, multiplicity 2
        let f = &p(&[-1, 2]) * &p(&[-1, 2]);
        let ivs = isolate(&f, -1, 1);
        assert_eq!(ivs.len(), 1);
        assert_eq!(ivs[0].multiplicity, 2);
        assert!(ivs[0].contains(&rat(1, 2)));
    }

    #[test]
    fn clustered_roots_stay_disjoint() {
        // roots at 1/64, 1/32, 3/64: tighter than the default width
        let f = &(&p(&[-1, 64]) * &p(&[-1, 32])) * &p(&[-3, 64]);
        let ivs = isolate(&f, -1, 1);
        assert_eq!(ivs.len(), 3);
        for w in ivs.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        assert!(ivs[0].contains(&rat(1, 64)));
        assert!(ivs[1].contains(&rat(1, 32)));
        assert!(ivs[2].contains(&rat(3, 64)));
        for iv in &ivs {
            assert!(!f.eval(&iv.lo).is_zero());
            assert!(!f.eval(&iv.hi).is_zero());
        }
    }

    #[test]
    fn custom_width() {
        let f = p(&[-2, 0, 1]);
        let ivs =
            sturm_isolate_with_width(&f, &rat_int(-2), &rat_int(2), &rat(1, 1024)).unwrap();
        assert_eq!(ivs.len(), 2);
        for iv in &ivs {
            assert!(iv.width() < rat(1, 1024));
        }
    }

    #[test]
    fn root_on_grid_midpoint() {
        // root exactly at 0, the first bisection midpoint of (-2, 2)
        let ivs = isolate(&p(&[0, 1]), -2, 2);
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&Rational::zero()));
        assert!(ivs[0].width() < rat(1, 64));
    }

    #[test]
    fn degree_eight_stress() {
        // prod (x - k/8) for k = -3..3, scaled to integer coefficients
        let mut f = IntPolynomial::one();
        for k in -3i64..=3 {
            f = &f * &p(&[-k, 8]);
        }
        let ivs = isolate(&f, -1, 1);
        assert_eq!(ivs.len(), 7);
        for (iv, k) in ivs.iter().zip(-3i64..=3) {
            assert!(iv.contains(&rat(k, 8)), "missing root {k}/8");
        }
    }
}
