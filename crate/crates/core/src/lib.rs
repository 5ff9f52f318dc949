//! Construction, enumeration and certified spectral comparison of bicyclic
//! graphs (connected graphs with one more edge than vertices).

pub mod dyadic;
pub mod enumeration;
pub mod exec;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod spectral;
pub mod transforms;
pub mod verify;

pub use dyadic::Dyadic;
pub use exec::Exec;
pub use families::{build_family, FamilySpec};
pub use graph::{canonical_form, CanonicalLabel, Graph, GraphError};
pub use poly::IntPolynomial;
