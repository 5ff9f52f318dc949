//! Two local operations that provably raise the spectral radius: moving
//! edges towards a vertex with a larger Perron entry, and balancing two
//! pendant paths hanging from the same vertex.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::spectral::{spectral_radius, SpectralError};

/// Perron entries closer than this count as equal.
pub const PERRON_TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    #[error("move needs at least one vertex to rotate")]
    EmptyMove,
    #[error("u and v must be distinct")]
    SameVertex,
    #[error("vertex {0} is not a neighbour of v")]
    NotNeighbourOfV(usize),
    #[error("vertex {0} is u or already adjacent to u")]
    CollidesWithU(usize),
    #[error("the move disconnects the graph")]
    Disconnects,
    #[error("path lengths must satisfy k >= m >= 1 (got k = {k}, m = {m})")]
    BadLengths { k: usize, m: usize },
    #[error("grafting needs a graph with at least one edge")]
    TrivialGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Replace edges `v w` by `u w` for every `w` in `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationMove {
    pub u: usize,
    pub v: usize,
    pub s: Vec<usize>,
}

impl RotationMove {
    pub fn new(u: usize, v: usize, s: Vec<usize>) -> Self {
        RotationMove { u, v, s }
    }

    fn validate(&self, g: &Graph) -> Result<(), TransformError> {
        for x in [self.u, self.v].iter().chain(&self.s) {
            if *x >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: *x, n: g.n() }.into());
            }
        }
        if self.u == self.v {
            return Err(TransformError::SameVertex);
        }
        if self.s.is_empty() {
            return Err(TransformError::EmptyMove);
        }
        for &w in &self.s {
            if !g.has_edge(self.v, w) {
                return Err(TransformError::NotNeighbourOfV(w));
            }
            if w == self.u || g.has_edge(self.u, w) {
                return Err(TransformError::CollidesWithU(w));
            }
        }
        Ok(())
    }
}

/// `G* = G - {v w : w in s} + {u w : w in s}`; rejects moves that
/// disconnect the graph.
pub fn rotate_edges(g: &Graph, mv: &RotationMove) -> Result<Graph, TransformError> {
    mv.validate(g)?;
    let mut h = *g;
    for &w in &mv.s {
        h = h.without_edge(mv.v, w)?.with_edge(mv.u, w)?;
    }
    if g.is_connected() && !h.is_connected() {
        return Err(TransformError::Disconnects);
    }
    Ok(h)
}

/// Whether the rotation is valid and the Perron hypothesis `x_u >= x_v`
/// holds, which guarantees `rho(G*) > rho(G)`.
pub fn is_rho_increasing(g: &Graph, mv: &RotationMove) -> Result<bool, TransformError> {
    rotate_edges(g, mv)?;
    let cert = spectral_radius(g)?;
    Ok(cert.perron[mv.u] >= cert.perron[mv.v] - PERRON_TIE_TOLERANCE)
}

fn hang_path(g: &Graph, v: usize, len: usize) -> Result<Graph, GraphError> {
    let mut h = *g;
    let mut prev = v;
    for _ in 0..len {
        let (next, idx) = h.with_vertex(&[prev])?;
        h = next;
        prev = idx;
    }
    Ok(h)
}

/// `(G_{k,m}, G_{k+1,m-1})`: `g` with pendant paths of lengths `k` and `m`
/// at `v`, and the same with lengths `k + 1` and `m - 1`.
pub fn graft_pair(g: &Graph, v: usize, k: usize, m: usize) -> Result<(Graph, Graph), TransformError> {
    if !(k >= m && m >= 1) {
        return Err(TransformError::BadLengths { k, m });
    }
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
    }
    if g.n() + k + m > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(g.n() + k + m).into());
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if g.n() < 2 {
        // On K1 both sides are paths and the pair is the same graph.
        return Err(TransformError::TrivialGraph);
    }
    let left = hang_path(&hang_path(g, v, k)?, v, m)?;
    let right = hang_path(&hang_path(g, v, k + 1)?, v, m - 1)?;
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::spectral::compare_radii;
    use std::cmp::Ordering;

    #[test]
    fn path_center_hypothesis_fails() {
        // a - b - c with b in the middle; move c from b to a.
        let p3 = named::path(3);
        let mv = RotationMove::new(0, 1, vec![2]);
        assert!(!is_rho_increasing(&p3, &mv).unwrap());
    }

    #[test]
    fn bowtie_pendant_moves_to_center() {
        let (g, leaf) = named::bowtie().with_vertex(&[1]).unwrap();
        let mv = RotationMove::new(0, 1, vec![leaf]);
        assert!(is_rho_increasing(&g, &mv).unwrap());
        let h = rotate_edges(&g, &mv).unwrap();
        assert_eq!((h.n(), h.m()), (g.n(), g.m()));
        assert_eq!(compare_radii(&h, &g), Ordering::Greater);
    }

    #[test]
    fn invalid_moves() {
        let g = named::bowtie();
        assert_eq!(rotate_edges(&g, &RotationMove::new(0, 1, vec![])), Err(TransformError::EmptyMove));
        assert_eq!(
            rotate_edges(&g, &RotationMove::new(0, 1, vec![2])),
            Err(TransformError::CollidesWithU(2))
        );
        // On 0-1-2-3, moving 2 from 3 to 0 strands vertex 3.
        let p = named::path(4);
        assert_eq!(
            rotate_edges(&p, &RotationMove::new(0, 3, vec![2])),
            Err(TransformError::Disconnects)
        );
    }

    #[test]
    fn grafting() {
        let (a, b) = graft_pair(&named::path(2), 0, 1, 1).unwrap();
        assert_eq!(compare_radii(&a, &b), Ordering::Greater);
        let (a, b) = graft_pair(&named::cycle(3), 0, 2, 2).unwrap();
        assert_eq!((a.n(), b.n()), (7, 7));
        assert_eq!(compare_radii(&a, &b), Ordering::Greater);
        assert!(graft_pair(&named::cycle(3), 0, 1, 0).is_err());
        assert!(graft_pair(&named::cycle(3), 0, 1, 2).is_err());
    }
}
