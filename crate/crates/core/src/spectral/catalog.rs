//! Closed-form characteristic polynomials of the named families and the
//! polynomial identities relating their reduced factors.
//!
//! Several printed forms contain typos; the catalog carries both the
//! corrected form (which matches the constructed graphs exactly) and the
//! printed form, so callers can report either.

use std::fmt;

use super::SpectralError;
use crate::families::FamilySpec;
use crate::poly::IntPolynomial;

/// Polynomial from coefficients listed highest degree first.
fn desc(c: &[i64]) -> IntPolynomial {
    let mut v = c.to_vec();
    v.reverse();
    IntPolynomial::from_i64(&v)
}

fn lin(a: i64, b: i64) -> IntPolynomial {
    desc(&[a, b])
}

fn x2m1() -> IntPolynomial {
    desc(&[1, 0, -1])
}

fn f(n: i64, a: i64) -> IntPolynomial {
    desc(&[1, 0, -(a + 3), -4, 2 * a - n + 1])
}

fn f1(n: i64, a: i64, printed: bool) -> IntPolynomial {
    let x1 = if printed { -2 } else { 0 };
    desc(&[1, 0, -(a + 5), -4, -(n - 6 * a), 4, 4 * n - 9 * a - 5, x1, -(n - 2 * a - 1)])
}

fn f2(n: i64, a: i64, printed: bool) -> IntPolynomial {
    let c0 = if printed { -(n - 2 * a - 1) } else { n - 2 * a - 1 };
    desc(&[1, -1, -(a + 3), a - 2, -(n - 3 * a - 5), n - 2 * a + 1, c0])
}

fn f3(n: i64, a: i64) -> IntPolynomial {
    desc(&[1, 0, -(a + 5), -4, -(n - 5 * a - 4), 6, 3 * n - 7 * a - 4, -2, -(n - 2 * a - 1)])
}

fn f4(n: i64, a: i64) -> IntPolynomial {
    desc(&[1, 0, -(a + 5), -4, -(n - 6 * a - 3), 2 * (a + 1), 4 * n - 8 * a - 9, 2 * (n - 2 * a - 2)])
}

fn f5(n: i64, a: i64) -> IntPolynomial {
    desc(&[
        1,
        -3,
        -a,
        3 * (a + 1),
        -(n - a - 4),
        3 * n - 8 * a - 7,
        -(n - 2 * a - 3),
        -2 * (n - 2 * a - 2),
    ])
}

fn f6(n: i64, a: i64) -> IntPolynomial {
    desc(&[1, -2, -(a + 2), 2 * (a + 1), -(n - 2 * a - 2), 2 * n - 4 * a - 4])
}

fn g_quartic(c: i64) -> IntPolynomial {
    desc(&[1, -2, -(c + 1), 2 * c, 3])
}

fn h_quintic(c: i64) -> IntPolynomial {
    desc(&[1, -2, -c, 2 * c, -1, -2])
}

fn g(c: i64) -> IntPolynomial {
    lin(1, -1).pow(2) * g_quartic(c)
}

fn h(c: i64) -> IntPolynomial {
    lin(1, -2) * h_quintic(c)
}

/// Product of `factor^exp` over possibly negative exponents, divided exactly.
fn assemble(factors: &[(IntPolynomial, i64)]) -> IntPolynomial {
    let mut num = IntPolynomial::one();
    let mut den = IntPolynomial::one();
    for (p, e) in factors {
        if *e >= 0 {
            num = &num * &p.pow(*e as u32);
        } else {
            den = &den * &p.pow(e.unsigned_abs() as u32);
        }
    }
    num.div_exact(&den)
        .expect("closed-form product has a polynomial quotient")
}

fn no_closed_form(spec: &FamilySpec) -> SpectralError {
    SpectralError::Infeasible(format!("{spec} has no closed-form characteristic polynomial"))
}

fn params(spec: &FamilySpec) -> Result<(i64, i64), SpectralError> {
    spec.check()
        .map_err(|e| SpectralError::Infeasible(e.to_string()))?;
    Ok((spec.n() as i64, spec.alpha().unwrap_or(0) as i64))
}

/// The reduced factor whose largest root is the spectral radius:
/// `g`, `h` for `F`, `F'`; `f`, `f1`, ..., `f6` for the `M` families.
pub fn reduced_poly(spec: &FamilySpec) -> Result<IntPolynomial, SpectralError> {
    use FamilySpec::*;
    let (n, a) = params(spec)?;
    Ok(match spec {
        F { .. } => g(n / 2),
        Fprime { .. } => h(n / 2),
        M { .. } => f(n, a),
        M1 { .. } => f1(n, a, false),
        M2 { .. } => f2(n, a, false),
        M3 { .. } => f3(n, a),
        M4 { .. } => f4(n, a),
        M5 { .. } => f5(n, a),
        M6 { .. } => f6(n, a),
        _ => return Err(no_closed_form(spec)),
    })
}

/// Full characteristic polynomial assembled from the closed forms.
pub fn family_poly(spec: &FamilySpec) -> Result<IntPolynomial, SpectralError> {
    use FamilySpec::*;
    let (n, a) = params(spec)?;
    let x = IntPolynomial::x();
    let red = reduced_poly(spec)?;
    let c = n / 2;
    let factors = match spec {
        F { .. } => vec![(x2m1(), c - 3), (lin(1, 1), 2), (g_quartic(c), 1)],
        Fprime { .. } => vec![(x2m1(), c - 5), (lin(1, 1), 4), (h(c), 1)],
        M { .. } => vec![(x, 2 * a - n), (x2m1(), n - a - 2), (red, 1)],
        M1 { .. } | M3 { .. } => vec![(x, 2 * a - n), (x2m1(), n - a - 4), (red, 1)],
        M2 { .. } => vec![
            (x, 2 * a - n),
            (x2m1(), n - a - 4),
            (desc(&[1, 1, -1]), 1),
            (red, 1),
        ],
        M4 { .. } => vec![(x, 2 * a - n + 1), (x2m1(), n - a - 4), (red, 1)],
        M5 { .. } => vec![
            (x, 2 * a - n + 1),
            (x2m1(), n - a - 6),
            (lin(1, 1), 2),
            (desc(&[1, 1, -1]), 1),
            (red, 1),
        ],
        M6 { .. } => vec![(x, 2 * a - n + 1), (x2m1(), n - a - 4), (lin(1, 1), 2), (red, 1)],
        _ => return Err(no_closed_form(spec)),
    };
    Ok(assemble(&factors))
}

/// The polynomial identities between reduced factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `f1 - (x^2-1)^2 f = 2x[(a-4)x^3 - 2x^2 + (n-2a)x + 2]`.
    Relation1,
    /// `(x^2+x-1) f2 - (x^2-1)^2 f = x[(a-2)x^3 + (n-2a)x + 2]`.
    Relation2,
    /// `f3 - (x^2-1)^2 f = x[(a-4)x^3 - 2x^2 + (n-2a+1)x + 2]`.
    Relation3,
    /// `x f4 - (x^2-1)^2 f = (2a-5)x^4 + ... + (n-2a-1)`.
    Relation4,
    /// `x(x^2+x-1) f5 - (x-1)^2 (x^2-1)^2 f = (2a-4)x^6 - ... + (n-2a-1)`.
    Relation5,
    /// `x(x+1)^2 f6 - (x^2-1)^2 f = (x+1)^2 [(a-4)x^2 + 2x + (n-2a-1)]`.
    Relation6,
    /// `h - g = (c-3)x(x-2) + 1` with `c = n/2`.
    FVersusFprime,
}

impl IdentityId {
    pub const ALL: [IdentityId; 7] = [
        IdentityId::Relation1,
        IdentityId::Relation2,
        IdentityId::Relation3,
        IdentityId::Relation4,
        IdentityId::Relation5,
        IdentityId::Relation6,
        IdentityId::FVersusFprime,
    ];

    /// The family whose feasibility gates the identity.
    pub fn family(&self, n: usize, alpha: usize) -> FamilySpec {
        use IdentityId::*;
        match self {
            Relation1 => FamilySpec::M1 { n, alpha },
            Relation2 => FamilySpec::M2 { n, alpha },
            Relation3 => FamilySpec::M3 { n, alpha },
            Relation4 => FamilySpec::M4 { n, alpha },
            Relation5 => FamilySpec::M5 { n, alpha },
            Relation6 => FamilySpec::M6 { n, alpha },
            FVersusFprime => FamilySpec::F { n },
        }
    }

    pub fn name(&self) -> &'static str {
        use IdentityId::*;
        match self {
            Relation1 => "relation-1",
            Relation2 => "relation-2",
            Relation3 => "relation-3",
            Relation4 => "relation-4",
            Relation5 => "relation-5",
            Relation6 => "relation-6",
            FVersusFprime => "h-minus-g",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for IdentityId {
    type Err = SpectralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| SpectralError::Infeasible(format!("unknown identity {s:?}")))
    }
}

/// Result of checking one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub id: IdentityId,
    pub n: usize,
    pub alpha: usize,
    /// The corrected identity holds as an exact polynomial equation.
    pub holds: bool,
    /// The identity exactly as printed holds.
    pub holds_as_printed: bool,
}

/// Exact check of one identity at `(n, alpha)`.
pub fn identity_check(id: IdentityId, n: usize, alpha: usize) -> Result<IdentityOutcome, SpectralError> {
    let spec = id.family(n, alpha);
    let (n_, a) = params(&spec)?;
    let x = IntPolynomial::x();
    let base = x2m1().pow(2) * f(n_, a);
    let (lhs, printed_lhs, rhs, printed_rhs) = match id {
        IdentityId::Relation1 => {
            let rhs = desc(&[2 * (a - 4), -4, 2 * (n_ - 2 * a), 4, 0]);
            (
                f1(n_, a, false) - &base,
                f1(n_, a, true) - &base,
                rhs.clone(),
                rhs,
            )
        }
        IdentityId::Relation2 => {
            let q = desc(&[1, 1, -1]);
            let rhs = desc(&[a - 2, 0, n_ - 2 * a, 2, 0]);
            (
                &q * &f2(n_, a, false) - &base,
                &q * &f2(n_, a, true) - &base,
                rhs.clone(),
                rhs,
            )
        }
        IdentityId::Relation3 => {
            let lhs = f3(n_, a) - &base;
            let rhs = desc(&[a - 4, -2, n_ - 2 * a + 1, 2, 0]);
            (lhs.clone(), lhs, rhs.clone(), rhs)
        }
        IdentityId::Relation4 => {
            let lhs = &x * &f4(n_, a) - &base;
            let rhs = desc(&[2 * a - 5, 2 * (a - 3), 2 * n_ - 3 * a - 4, 2 * (n_ - 2 * a), n_ - 2 * a - 1]);
            (lhs.clone(), lhs, rhs.clone(), rhs)
        }
        IdentityId::Relation5 => {
            let rhs = desc(&[
                2 * a - 4,
                -(2 * a - 6),
                2 * n_ - 6 * a + 5,
                -(2 * n_ - 4 * a),
                -(2 * n_ - 5 * a + 3),
                2,
                n_ - 2 * a - 1,
            ]);
            let lhs = &x * &desc(&[1, 1, -1]) * f5(n_, a) - lin(1, -1).pow(2) * &base;
            let printed = &x * &desc(&[1, 1, 1]) * f5(n_, a) - lin(1, 1).pow(2) * &base;
            (lhs, printed, rhs.clone(), rhs)
        }
        IdentityId::Relation6 => {
            let lhs = &x * &lin(1, 1).pow(2) * f6(n_, a) - &base;
            let printed_rhs = desc(&[a - 4, 2, n_ - 2 * a - 1]);
            (lhs.clone(), lhs, lin(1, 1).pow(2) * &printed_rhs, printed_rhs)
        }
        IdentityId::FVersusFprime => {
            let c = n_ / 2;
            let lhs = h(c) - g(c);
            let rhs = desc(&[c - 3, -2 * (c - 3), 1]);
            (lhs.clone(), lhs, rhs.clone(), rhs)
        }
    };
    Ok(IdentityOutcome {
        id,
        n,
        alpha,
        holds: lhs == rhs,
        holds_as_printed: printed_lhs == printed_rhs,
    })
}

/// Checks every identity at every feasible `(n, alpha)` with `n` in range.
pub fn identity_catalog(n_min: usize, n_max: usize) -> Vec<IdentityOutcome> {
    let mut out = Vec::new();
    for id in IdentityId::ALL {
        for n in n_min..=n_max {
            let alphas: Vec<usize> = if id == IdentityId::FVersusFprime {
                vec![n.saturating_sub(2) / 2]
            } else {
                (0..=n).collect()
            };
            for alpha in alphas {
                if let Ok(o) = identity_check(id, n, alpha) {
                    out.push(o);
                }
            }
        }
    }
    out
}
