//! Exact real-root isolation for integer polynomials with Sturm sequences.
//!
//! Only the largest real root matters here: spectral radii are the largest
//! roots of characteristic polynomials, and every reduced factor in the
//! family catalog is compared through its largest root.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::SpectralError;
use crate::dyadic::Dyadic;
use crate::poly::IntPolynomial;

/// Sturm sequence `p, p', -rem(p, p'), ...`, each term made primitive.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut seq = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            seq.push(d);
            loop {
                let k = seq.len();
                let r = seq[k - 2].signed_pseudo_rem(&seq[k - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(-r);
            }
        }
        SturmChain { seq }
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.seq[0]
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, t: &Dyadic) -> usize {
        Self::variations(self.seq.iter().map(|q| q.sign_at(t)))
    }

    fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|q| {
            if q.leading().unwrap().is_positive() {
                1
            } else {
                -1
            }
        }))
    }

    /// Number of distinct real roots strictly greater than `t`.
    pub fn roots_above(&self, t: &Dyadic) -> usize {
        if self.seq[0].sign_at(t) != 0 {
            return self.variations_at(t) - self.variations_at_pos_inf();
        }
        // t is a root: strip every factor (2^k x - m) and count for the rest.
        let deflated = deflate(&self.seq[0], t);
        if deflated.degree() == Some(0) {
            return 0;
        }
        SturmChain::new(&deflated).roots_above(t)
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn roots_in(&self, a: &Dyadic, b: &Dyadic) -> usize {
        if a >= b {
            return 0;
        }
        self.roots_above(a) - self.roots_above(b)
    }
}

/// Divides out every power of the linear factor vanishing at `t`.
fn deflate(p: &IntPolynomial, t: &Dyadic) -> IntPolynomial {
    let (m, den) = t.as_fraction();
    let lin = IntPolynomial::new(vec![-m, den]);
    let mut q = p.clone();
    while q.degree().is_some_and(|d| d > 0) && q.sign_at(t) == 0 {
        q = q.div_exact(&lin).expect("Gauss lemma: primitive linear factor divides exactly");
    }
    q
}

/// Sufficient test that `p` has no real root `>= t`: every Taylor
/// coefficient of `p(x + t)` is positive (Descartes' rule of signs). For
/// real-rooted `p` with positive leading coefficient it is also necessary.
pub fn no_root_at_or_above(p: &IntPolynomial, t: &Dyadic) -> bool {
    let Some(d) = p.degree() else {
        return false;
    };
    let (m, den) = t.as_fraction();
    // e(z) = 2^{kd} p(z / 2^k), then shift z -> z + m.
    let mut e: Vec<BigInt> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c * den.pow((d - i) as u32))
        .collect();
    for i in 0..d {
        for j in (i..d).rev() {
            let add = &m * &e[j + 1];
            e[j] += add;
        }
    }
    e.iter().all(|c| c.is_positive())
}

/// 1 + ceil(max |a_i| / |a_n|): every root has modulus strictly below it.
pub fn cauchy_bound(p: &IntPolynomial) -> BigInt {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    let q = (&max + &lead - BigInt::one()) / &lead;
    q + BigInt::one()
}

/// Certified bracket around the largest real root of a polynomial.
///
/// Invariant: the root lies in `[lo, hi]`; when not exact, `lo` is strictly
/// below the root and no root exceeds `hi`.
#[derive(Clone, Debug)]
pub struct LargestRoot {
    chain: SturmChain,
    lo: Dyadic,
    hi: Dyadic,
    exact: bool,
}

impl LargestRoot {
    /// Brackets the largest real root, optionally starting from a float guess.
    pub fn new(p: &IntPolynomial, seed: Option<f64>) -> Result<Self, SpectralError> {
        if p.degree().unwrap_or(0) == 0 {
            return Err(SpectralError::NoRealRoot(p.to_string()));
        }
        let chain = SturmChain::new(p);
        if let Some(s) = seed.filter(|s| s.is_finite()) {
            let delta = 1e-6 * s.abs().max(1.0);
            let lo = Dyadic::from_f64(s - delta);
            let hi = Dyadic::from_f64(s + delta);
            if chain.poly().sign_at(&hi) != 0
                && chain.roots_above(&hi) == 0
                && chain.roots_above(&lo) >= 1
            {
                return Ok(LargestRoot {
                    chain,
                    lo,
                    hi,
                    exact: false,
                });
            }
        }
        let b = cauchy_bound(p);
        let hi = Dyadic::new(b.clone(), 0);
        let lo = Dyadic::new(-b, 0);
        if chain.roots_above(&lo) == 0 {
            return Err(SpectralError::NoRealRoot(p.to_string()));
        }
        Ok(LargestRoot {
            chain,
            lo,
            hi,
            exact: false,
        })
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn poly(&self) -> &IntPolynomial {
        self.chain.poly()
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.lo.midpoint(&self.hi).to_f64()
    }

    /// Halves the bracket once.
    pub fn bisect(&mut self) {
        if self.exact {
            return;
        }
        // Split inside the middle half at the simplest dyadic available.
        let quarter = self.width().mul(&Dyadic::new(BigInt::one(), 2));
        let mid = Dyadic::simplest_between(&self.lo.add(&quarter), &self.hi.sub(&quarter));
        let above = self.chain.roots_above(&mid);
        if above >= 1 {
            self.lo = mid;
        } else if self.chain.poly().sign_at(&mid) == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            self.exact = true;
        } else {
            self.hi = mid;
        }
    }

    /// Bisects until `hi - lo <= tol`.
    pub fn refine_to(&mut self, tol: f64) {
        let tol = Dyadic::from_f64(tol);
        while !self.exact && self.width() > tol {
            self.bisect();
        }
    }

    /// Whether the bracket holds exactly one distinct root of the polynomial.
    pub fn is_isolating(&self) -> bool {
        self.exact || self.chain.roots_above(&self.lo) == 1
    }

    /// Sign of `root - t`.
    pub fn cmp_point(&self, t: &Dyadic) -> Ordering {
        if self.chain.roots_above(t) >= 1 {
            Ordering::Greater
        } else if self.chain.poly().sign_at(t) == 0 {
            Ordering::Equal
        } else {
            Ordering::Less
        }
    }
}

/// Certified isolating interval of width at most `tol` around the largest
/// real root of `p`.
pub fn largest_real_root(p: &IntPolynomial, tol: f64) -> Result<LargestRoot, SpectralError> {
    let mut r = LargestRoot::new(p, None)?;
    r.refine_to(tol);
    Ok(r)
}

/// Exact comparison of the largest real roots of two polynomials.
pub fn compare_largest_roots(a: &mut LargestRoot, b: &mut LargestRoot) -> Ordering {
    if a.exact {
        return b.cmp_point(&a.lo).reverse();
    }
    if b.exact {
        return a.cmp_point(&b.lo);
    }
    let mut common: Option<SturmChain> = None;
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if a.is_isolating() && b.is_isolating() {
            let chain = common.get_or_insert_with(|| SturmChain::new(&a.poly().gcd(b.poly())));
            if chain.poly().degree().unwrap_or(0) > 0 {
                let lo = (&a.lo).max(&b.lo);
                let hi = (&a.hi).min(&b.hi);
                if chain.roots_in(lo, hi) > 0 {
                    return Ordering::Equal;
                }
            }
        }
        if a.width() >= b.width() {
            a.bisect();
        } else {
            b.bisect();
        }
        if a.exact {
            return b.cmp_point(&a.lo).reverse();
        }
        if b.exact {
            return a.cmp_point(&b.lo);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x+3)
        let q = &(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[3, 1]);
        let s = SturmChain::new(&q);
        assert_eq!(s.roots_above(&Dyadic::from_int(-10)), 3);
        assert_eq!(s.roots_above(&Dyadic::from_f64(1.5)), 1);
        assert_eq!(s.roots_above(&Dyadic::from_int(1)), 1);
        assert_eq!(s.roots_above(&Dyadic::from_int(2)), 0);
        assert_eq!(s.roots_in(&Dyadic::from_int(0), &Dyadic::from_int(2)), 2);
    }

    #[test]
    fn repeated_roots_counted_once() {
        let q = p(&[-1, 0, 1]).pow(3) * p(&[0, 1]).pow(2);
        let s = SturmChain::new(&q);
        assert_eq!(s.roots_above(&Dyadic::from_int(-5)), 3);
        assert_eq!(s.roots_above(&Dyadic::from_int(0)), 1);
    }

    #[test]
    fn x_squared_minus_one() {
        let r = largest_real_root(&p(&[-1, 0, 1]), 1e-9).unwrap();
        assert!(r.lo() <= &Dyadic::from_int(1) && &Dyadic::from_int(1) <= r.hi());
        assert!((r.midpoint_f64() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn quartic_for_m_10_5() {
        // x^4 - 8x^2 - 4x + 1
        let q = p(&[1, -4, -8, 0, 1]);
        assert_eq!(q.sign_at(&Dyadic::from_int(3)), -1);
        assert_eq!(q.eval_i64(3), BigInt::from(-2));
        let r = largest_real_root(&q, 1e-9).unwrap();
        assert!(r.lo() > &Dyadic::from_int(3));
        assert!(r.hi() < &Dyadic::from_f64(3.1));
    }

    #[test]
    fn taylor_shift_test() {
        // (x-1)(x-2)(x+3)
        let q = &(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[3, 1]);
        assert!(no_root_at_or_above(&q, &Dyadic::from_f64(2.5)));
        assert!(no_root_at_or_above(&q, &Dyadic::from_f64(2.0001)));
        assert!(!no_root_at_or_above(&q, &Dyadic::from_int(2)));
        assert!(!no_root_at_or_above(&q, &Dyadic::from_f64(1.5)));
    }

    #[test]
    fn no_real_root() {
        assert!(largest_real_root(&p(&[1, 0, 1]), 1e-9).is_err());
        assert!(largest_real_root(&p(&[5]), 1e-9).is_err());
    }

    #[test]
    fn comparisons() {
        let mut a = LargestRoot::new(&p(&[-2, 0, 1]), None).unwrap();
        let mut b = LargestRoot::new(&p(&[-3, 0, 1]), None).unwrap();
        assert_eq!(compare_largest_roots(&mut a, &mut b), Ordering::Less);
        // Same largest root sqrt(2) from different polynomials.
        let mut c = LargestRoot::new(&(p(&[-2, 0, 1]) * p(&[1, 1])), None).unwrap();
        let mut d = LargestRoot::new(&(p(&[-2, 0, 1]) * p(&[0, 1])), None).unwrap();
        assert_eq!(compare_largest_roots(&mut c, &mut d), Ordering::Equal);
        // Exact dyadic root.
        let mut e = LargestRoot::new(&p(&[-2, 1]), None).unwrap();
        e.refine_to(1e-3);
        assert!(e.is_exact());
        let mut f = LargestRoot::new(&p(&[0, 0, -4, 0, 1]), None).unwrap();
        assert_eq!(compare_largest_roots(&mut e, &mut f), Ordering::Equal);
    }
}
