//! Univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dyadic::Dyadic;

/// Coefficients in ascending degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::from(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact quotient `self / d` when `d` divides `self` over the integers.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_integral(d)?;
        r.is_zero().then_some(q)
    }

    /// Long division that succeeds only while every step stays integral.
    fn div_rem_integral(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lead = d.leading()?.clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Pseudo-remainder scaled so that its sign matches the true remainder:
    /// the result is a positive multiple of `self mod d`.
    pub fn signed_pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lead = d.leading().unwrap().clone();
        let lead_abs = lead.abs();
        let sign = if lead.is_negative() { -BigInt::one() } else { BigInt::one() };
        let mut rem = self.coeffs.clone();
        for k in (0..=ds - dd).rev() {
            let top = rem[k + dd].clone();
            // rem <- |lead| * rem - sign * top * x^k * d
            for c in rem.iter_mut() {
                *c *= &lead_abs;
            }
            if !top.is_zero() {
                let t = &top * &sign;
                for (i, c) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &t * c;
                }
            }
            debug_assert!(rem[k + dd].is_zero());
        }
        rem.truncate(dd);
        Self::new(rem).primitive_part()
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b);
            a = b;
            b = r;
        }
        if a.leading().is_some_and(Signed::is_negative) {
            a = -a;
        }
        a.primitive_part()
    }

    /// Sign of `p(m / 2^k)`, evaluated exactly.
    pub fn sign_at(&self, t: &Dyadic) -> i8 {
        sign_of(&self.homogeneous_at_dyadic(t))
    }

    /// `2^{k d} p(m / 2^k)` for `t = m / 2^k` and `d = deg p`.
    pub(crate) fn homogeneous_at_dyadic(&self, t: &Dyadic) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let k = t.exponent() as usize;
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * t.mantissa() + (c << (k * (d - i)));
        }
        acc
    }

    /// Sign of `p(num / den)` for `den > 0`.
    pub fn sign_at_rational(&self, num: &BigInt, den: &BigInt) -> i8 {
        debug_assert!(den.is_positive());
        let Some(d) = self.degree() else {
            return 0;
        };
        let mut den_pows = Vec::with_capacity(d + 1);
        den_pows.push(BigInt::one());
        for i in 1..=d {
            let next = &den_pows[i - 1] * den;
            den_pows.push(next);
        }
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * num + c * &den_pows[d - i];
        }
        sign_of(&acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Space-separated ascending coefficients.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
