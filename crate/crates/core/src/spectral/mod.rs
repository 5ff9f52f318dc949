//! Characteristic polynomials, certified spectral radii and exact comparisons.

mod catalog;
mod charpoly;
mod radius;
mod roots;
mod schwenk;

use thiserror::Error;

use crate::graph::GraphError;

pub use catalog::{
    family_poly, identity_check, identity_catalog, reduced_poly, IdentityId, IdentityOutcome,
};
pub use charpoly::char_poly;
pub use radius::{
    compare_certificates, compare_radii, power_iteration, spectral_radius, spectral_radius_with_tol,
    sqrt_delta_bound_check, SpectralCertificate, DEFAULT_TOLERANCE,
};
pub use roots::{
    cauchy_bound, compare_largest_roots, largest_real_root, no_root_at_or_above, LargestRoot, SturmChain,
};
pub use schwenk::schwenk_delete;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("polynomial {0} has no real root")]
    NoRealRoot(String),
    #[error("Perron vector residual {0:e} exceeds 1e-9")]
    PerronResidual(f64),
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("{0}")]
    Infeasible(String),
}
