use std::cmp::Ordering;

use super::roots::{compare_largest_roots, LargestRoot};
use super::{char_poly, SpectralError};
use crate::dyadic::Dyadic;
use crate::graph::{canonical_form, Bits, Graph, GraphError};
use crate::poly::IntPolynomial;
use crate::spectral::roots::SturmChain;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

const RESIDUAL_LIMIT: f64 = 1e-9;

/// Spectral radius with a certified bracket and the Perron vector.
///
/// `lo <= rho <= hi` is certified by exact sign evaluation of the
/// characteristic polynomial; `rho` is the bracket midpoint.
#[derive(Clone, Debug)]
pub struct SpectralCertificate {
    pub rho: f64,
    pub perron: Vec<f64>,
    root: LargestRoot,
}

impl SpectralCertificate {
    pub fn lo(&self) -> &Dyadic {
        self.root.lo()
    }

    pub fn hi(&self) -> &Dyadic {
        self.root.hi()
    }

    pub fn lo_f64(&self) -> f64 {
        self.root.lo().to_f64()
    }

    pub fn hi_f64(&self) -> f64 {
        self.root.hi().to_f64()
    }

    /// True when bisection hit the radius exactly (e.g. cycles, stars).
    pub fn is_exact(&self) -> bool {
        self.root.is_exact()
    }

    pub fn poly(&self) -> &IntPolynomial {
        self.root.poly()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo_f64() <= x && x <= self.hi_f64()
    }

    /// Shrinks the bracket to width `tol` and refreshes `rho`.
    pub fn refine_to(&mut self, tol: f64) {
        self.root.refine_to(tol);
        self.rho = self.root.midpoint_f64();
    }
}

/// Power iteration on `A + I` (aperiodic for connected graphs).
/// Returns the Rayleigh quotient of `A` and the unit iterate.
pub fn power_iteration(g: &Graph, max_iter: usize, tol: f64) -> (f64, Vec<f64>) {
    let n = g.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut rho = 0.0;
    for _ in 0..max_iter {
        let ax = mul_adj(g, &x);
        let next_rho: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let mut y: Vec<f64> = ax.iter().zip(&x).map(|(a, b)| a + b).collect();
        normalize(&mut y);
        x = y;
        let done = (next_rho - rho).abs() < tol;
        rho = next_rho;
        if done {
            break;
        }
    }
    (rho, x)
}

pub fn spectral_radius(g: &Graph) -> Result<SpectralCertificate, SpectralError> {
    spectral_radius_with_tol(g, DEFAULT_TOLERANCE)
}

pub fn spectral_radius_with_tol(g: &Graph, tol: f64) -> Result<SpectralCertificate, SpectralError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(SpectralError::BadTolerance(tol));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let (seed, _) = power_iteration(g, 10_000, 1e-13);
    let mut root = LargestRoot::new(&char_poly(g), Some(seed))?;
    root.refine_to(tol.min(1e-9));
    let rho = root.midpoint_f64();
    let perron = perron_vector(g, rho)?;
    let mut cert = SpectralCertificate { rho, perron, root };
    cert.refine_to(tol);
    Ok(cert)
}

fn mul_adj(g: &Graph, x: &[f64]) -> Vec<f64> {
    (0..g.n())
        .map(|v| Bits(g.adjacency(v)).map(|u| x[u]).sum())
        .collect()
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
    x.iter_mut().for_each(|a| *a /= norm);
}

/// Inverse iteration with a shift just above `rho`; `rho` must be accurate
/// to well below the shift.
fn perron_vector(g: &Graph, rho: f64) -> Result<Vec<f64>, SpectralError> {
    let n = g.n();
    if n == 1 {
        return Ok(vec![1.0]);
    }
    let sigma = rho + 1e-7;
    let mut m = vec![vec![0.0; n]; n];
    for (v, row) in m.iter_mut().enumerate() {
        row[v] = sigma;
        for u in Bits(g.adjacency(v)) {
            row[u] = -1.0;
        }
    }
    let lu = Lu::new(m);
    let mut x = vec![1.0; n];
    normalize(&mut x);
    for _ in 0..4 {
        x = lu.solve(&x);
        normalize(&mut x);
    }
    if x.iter().sum::<f64>() < 0.0 {
        x.iter_mut().for_each(|a| *a = -*a);
    }
    let ax = mul_adj(g, &x);
    let residual = ax
        .iter()
        .zip(&x)
        .map(|(a, b)| (a - rho * b).abs())
        .fold(0.0, f64::max);
    if residual > RESIDUAL_LIMIT || x.iter().any(|&a| a <= 0.0) {
        return Err(SpectralError::PerronResidual(residual));
    }
    Ok(x)
}

/// Dense LU with partial pivoting.
struct Lu {
    a: Vec<Vec<f64>>,
    piv: Vec<usize>,
}

impl Lu {
    fn new(mut a: Vec<Vec<f64>>) -> Self {
        let n = a.len();
        let mut piv: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))
                .unwrap();
            a.swap(k, p);
            piv.swap(k, p);
            for i in k + 1..n {
                let f = a[i][k] / a[k][k];
                a[i][k] = f;
                for j in k + 1..n {
                    a[i][j] -= f * a[k][j];
                }
            }
        }
        Lu { a, piv }
    }

    fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.a.len();
        let mut y: Vec<f64> = self.piv.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                y[i] -= self.a[i][j] * y[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                y[i] -= self.a[i][j] * y[j];
            }
            y[i] /= self.a[i][i];
        }
        y
    }
}

/// Exact ordering of two certified radii, refining brackets as needed.
pub fn compare_certificates(a: &mut SpectralCertificate, b: &mut SpectralCertificate) -> Ordering {
    compare_largest_roots(&mut a.root, &mut b.root)
}

/// Exact ordering of the largest adjacency eigenvalues of two graphs.
pub fn compare_radii(g1: &Graph, g2: &Graph) -> Ordering {
    if g1.n() == g2.n() && canonical_form(g1) == canonical_form(g2) {
        return Ordering::Equal;
    }
    let seed = |g: &Graph| g.is_connected().then(|| power_iteration(g, 10_000, 1e-12).0);
    let mut a = LargestRoot::new(&char_poly(g1), seed(g1)).expect("adjacency spectra are real");
    let mut b = LargestRoot::new(&char_poly(g2), seed(g2)).expect("adjacency spectra are real");
    compare_largest_roots(&mut a, &mut b)
}

/// Decides `rho(g)^2 >= Delta(g)` exactly.
///
/// `(-1)^n Phi(x) Phi(-x)` is a polynomial in `y = x^2` whose roots are the
/// squared eigenvalues, so its largest root is `rho^2`.
pub fn sqrt_delta_bound_check(g: &Graph) -> bool {
    let phi = char_poly(g);
    let n = g.n();
    let neg: Vec<_> = phi
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    let mut prod = &phi * &IntPolynomial::new(neg);
    if n % 2 == 1 {
        prod = -prod;
    }
    let psi = IntPolynomial::new(prod.coeffs().iter().step_by(2).cloned().collect());
    let delta = Dyadic::from_int(g.max_degree() as i64);
    psi.sign_at(&delta) == 0 || SturmChain::new(&psi).roots_above(&delta) >= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn cycles_are_exactly_two() {
        for n in 3..12 {
            let c = spectral_radius(&named::cycle(n)).unwrap();
            assert!(c.is_exact(), "C{n}");
            assert_eq!(c.rho, 2.0);
            assert!(c.perron.iter().all(|&x| (x - 1.0 / (n as f64).sqrt()).abs() < 1e-9));
        }
    }

    #[test]
    fn star_radius() {
        let c = spectral_radius(&named::star(4)).unwrap();
        assert_eq!(c.rho, 2.0);
        let c = spectral_radius(&named::star(5)).unwrap();
        assert!(c.contains(5f64.sqrt()));
        assert!(c.hi_f64() - c.lo_f64() <= 1e-9);
    }

    #[test]
    fn single_vertex_and_disconnected() {
        let c = spectral_radius(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(c.rho, 0.0);
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(spectral_radius(&two).is_err());
    }

    #[test]
    fn perron_is_unit_positive() {
        let g = named::bowtie();
        let c = spectral_radius(&g).unwrap();
        let norm: f64 = c.perron.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-12);
        assert!(c.perron[0] > c.perron[1]);
        let (p, _) = power_iteration(&g, 10_000, 1e-14);
        assert!((p - c.rho).abs() < 1e-8);
    }

    #[test]
    fn compare_basic() {
        let c4 = named::cycle(4);
        let c4b = c4.relabel(&[2, 0, 3, 1]);
        assert_eq!(compare_radii(&c4, &c4b), Ordering::Equal);
        // C5 and C6 are non-isomorphic with the same radius 2.
        assert_eq!(compare_radii(&named::cycle(5), &named::cycle(6)), Ordering::Equal);
        assert_eq!(compare_radii(&named::path(4), &named::cycle(4)), Ordering::Less);
        assert_eq!(compare_radii(&named::bowtie(), &named::star(4)), Ordering::Greater);
        // K_{1,4} and C_4 plus isolated vertex share radius 2 through different polys.
        let c4_iso = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(compare_radii(&named::star(4), &c4_iso), Ordering::Equal);
    }

    #[test]
    fn sqrt_delta() {
        assert!(sqrt_delta_bound_check(&named::star(4)));
        assert!(sqrt_delta_bound_check(&named::cycle(5)));
        assert!(sqrt_delta_bound_check(&named::bowtie()));
        assert!(sqrt_delta_bound_check(&Graph::empty(3).unwrap()));
    }
}
