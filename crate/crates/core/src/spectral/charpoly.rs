//! Characteristic polynomial `det(xI - A)` by Faddeev-LeVerrier.
//!
//! The recurrence only divides by `k` where the division is exact, so it runs
//! over the integers. An `i128` pass is tried first; any overflow reruns the
//! whole computation over `BigInt`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::{Bits, Graph};
use crate::poly::IntPolynomial;

trait Exact: Clone + Sized {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn div_small(&self, k: i64) -> Option<Self>;
}

impl Exact for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_small(&self, k: i64) -> Option<Self> {
        let k = k as i128;
        debug_assert_eq!(self % k, 0);
        Some(self / k)
    }
}

impl Exact for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_small(&self, k: i64) -> Option<Self> {
        Some(self / k)
    }
}

fn faddeev_leverrier<T: Exact>(g: &Graph) -> Option<Vec<T>> {
    let n = g.n();
    let rows = g.rows();
    let mut c = vec![T::zero(); n + 1];
    c[n] = T::from_i64(1);
    // m holds M_k, row-major.
    let mut m = vec![T::zero(); n * n];
    let mut am = vec![T::zero(); n * n];
    for k in 1..=n {
        // am = A * M_{k-1}
        for i in 0..n {
            for j in 0..n {
                let mut s = T::zero();
                for l in Bits(rows[i]) {
                    s = s.add(&m[l * n + j])?;
                }
                am[i * n + j] = s;
            }
        }
        // M_k = A M_{k-1} + c_{n-k+1} I
        std::mem::swap(&mut m, &mut am);
        for i in 0..n {
            m[i * n + i] = m[i * n + i].add(&c[n - k + 1])?;
        }
        // tr(A M_k)
        let mut tr = T::zero();
        for i in 0..n {
            for l in Bits(rows[i]) {
                tr = tr.add(&m[l * n + i])?;
            }
        }
        c[n - k] = tr.div_small(k as i64)?.neg()?;
    }
    Some(c)
}

/// Exact monic characteristic polynomial of the adjacency matrix.
pub fn char_poly(g: &Graph) -> IntPolynomial {
    if let Some(c) = faddeev_leverrier::<i128>(g) {
        return IntPolynomial::new(c.into_iter().map(BigInt::from).collect());
    }
    let c = faddeev_leverrier::<BigInt>(g).expect("BigInt arithmetic cannot overflow");
    IntPolynomial::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn small_cases() {
        assert_eq!(char_poly(&path(2)), IntPolynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(char_poly(&cycle(4)), IntPolynomial::from_i64(&[0, 0, -4, 0, 1]));
        assert_eq!(char_poly(&cycle(3)), IntPolynomial::from_i64(&[-2, -3, 0, 1]));
        assert_eq!(char_poly(&Graph::empty(1).unwrap()), IntPolynomial::x());
    }

    #[test]
    fn bigint_path_agrees_with_i128() {
        let g = complete(9);
        let a = faddeev_leverrier::<i128>(&g).unwrap();
        let b = faddeev_leverrier::<BigInt>(&g).unwrap();
        assert_eq!(a.into_iter().map(BigInt::from).collect::<Vec<_>>(), b);
    }

    #[test]
    fn large_complete_graph() {
        // det(xI - J + I) = (x - 31)(x + 1)^31 for K_32.
        let g = complete(32);
        let expect = IntPolynomial::from_i64(&[-31, 1]) * IntPolynomial::from_i64(&[1, 1]).pow(31);
        assert_eq!(char_poly(&g), expect);
    }
}
