//! Dyadic rationals `m / 2^k`, the exact bisection points used by root
//! isolation. Every finite `f64` is dyadic, so float seeds convert losslessly.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: u32,
}

impl Dyadic {
    /// `m / 2^k`, reduced.
    pub fn new(mantissa: BigInt, exponent: u32) -> Self {
        let mut d = Dyadic { mantissa, exponent };
        d.normalize();
        d
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    /// Exact value of a finite float.
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "non-finite float {v}");
        if v == 0.0 {
            return Self::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if raw_exp == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        let m = BigInt::from(mant) * sign;
        if exp >= 0 {
            Dyadic::new(m << exp as usize, 0)
        } else {
            Dyadic::new(m, (-exp) as u32)
        }
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        while self.exponent > 0 && self.mantissa.is_even() {
            self.mantissa >>= 1;
            self.exponent -= 1;
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        let k = self.exponent.max(other.exponent);
        (
            &self.mantissa << (k - self.exponent) as usize,
            &other.mantissa << (k - other.exponent) as usize,
            k,
        )
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let (a, b, k) = self.aligned(other);
        Dyadic::new(a + b, k)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let (a, b, k) = self.aligned(other);
        Dyadic::new(a - b, k)
    }

    pub fn midpoint(&self, other: &Dyadic) -> Dyadic {
        let (a, b, k) = self.aligned(other);
        Dyadic::new(a + b, k + 1)
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mantissa * &other.mantissa, self.exponent + other.exponent)
    }

    /// The dyadic with the smallest denominator in `[lo, hi]` (nearest to
    /// `lo` among those). Bisecting at such points lands exactly on small
    /// dyadic roots such as integers.
    pub fn simplest_between(lo: &Dyadic, hi: &Dyadic) -> Dyadic {
        assert!(lo <= hi, "empty interval");
        let max_k = lo.exponent.max(hi.exponent);
        for k in 0..=max_k {
            let m = lo.ceil_scaled(k);
            let cand = Dyadic::new(m, k);
            if &cand <= hi {
                return cand;
            }
        }
        unreachable!("lo itself has denominator 2^{}", lo.exponent)
    }

    /// `ceil(self * 2^k)`.
    fn ceil_scaled(&self, k: u32) -> BigInt {
        if k >= self.exponent {
            &self.mantissa << (k - self.exponent) as usize
        } else {
            let d = BigInt::one() << (self.exponent - k) as usize;
            Integer::div_ceil(&self.mantissa, &d)
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Nearest float (ties resolved by the conversion of the quotient).
    pub fn to_f64(&self) -> f64 {
        // Drop low bits first so huge mantissas do not overflow.
        let excess = (self.mantissa.bits() as i64 - 900).max(0) as u32;
        let excess = excess.min(self.exponent);
        let m = (&self.mantissa >> excess as usize).to_f64().unwrap_or(f64::NAN);
        m / 2f64.powi((self.exponent - excess) as i32)
    }

    /// Rational `(num, den)` with `den = 2^k`.
    pub fn as_fraction(&self) -> (BigInt, BigInt) {
        (self.mantissa.clone(), BigInt::one() << self.exponent as usize)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{} (~{:.17})", self.mantissa, self.exponent, self.to_f64())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_conversion_is_exact() {
        for v in [0.0, 1.0, -2.5, 3.1, 1e-9, 123456.789, f64::MIN_POSITIVE] {
            assert_eq!(Dyadic::from_f64(v).to_f64(), v);
        }
        assert_eq!(Dyadic::from_f64(0.75), Dyadic::new(BigInt::from(3), 2));
    }

    #[test]
    fn arithmetic_and_order() {
        let a = Dyadic::from_f64(1.5);
        let b = Dyadic::from_int(2);
        assert_eq!(a.midpoint(&b), Dyadic::from_f64(1.75));
        assert_eq!(b.sub(&a), Dyadic::from_f64(0.5));
        assert_eq!(a.add(&b), Dyadic::from_f64(3.5));
        assert_eq!(a.mul(&b), Dyadic::from_int(3));
        assert!(a < b);
        assert!(Dyadic::from_int(-1).is_negative());
    }
}
