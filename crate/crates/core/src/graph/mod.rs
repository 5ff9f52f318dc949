//! Small simple undirected graphs with value semantics.
//!
//! A [`Graph`] stores one neighbour bitset per vertex, so every graph on at
//! most [`MAX_VERTICES`] vertices fits in a fixed-size `Copy` value. All
//! enumeration and spectral code in the crate works on this representation.

mod canon;
mod graph6;

pub use canon::{canonical_form, canonical_form_with_bound, CanonicalLabel};
pub use graph6::{parse_graph6, read_graph6, to_graph6, write_graph6};

use std::fmt;

use thiserror::Error;

/// Largest vertex count representable by [`Graph`].
pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0} vertices exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bicyclic (n = {n}, m = {m}, connected = {connected})")]
    NotBicyclic { n: usize, m: usize, connected: bool },
    #[error("graph has {n} vertices, above the canonical labeling bound {bound}")]
    AboveCanonicalBound { n: usize, bound: usize },
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u32);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph directly from neighbour bitsets. The caller guarantees
    /// symmetry and the absence of loops.
    pub(crate) fn from_rows(n: usize, rows: &[u32]) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&n) && rows.len() >= n);
        let mut adj = [0u32; MAX_VERTICES];
        adj[..n].copy_from_slice(&rows[..n]);
        for (v, row) in adj.iter().enumerate().take(n) {
            debug_assert_eq!(row & (1 << v), 0);
            debug_assert_eq!(row & !full_mask(n), 0);
        }
        Graph { n, adj }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbour bitsets, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    /// Neighbour bitset of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn adjacency(&self, v: usize) -> u32 {
        assert!(v < self.n, "vertex {v} out of range");
        self.adj[v]
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        full_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(v)?;
        Ok(Bits(self.adj[v]).collect())
    }

    /// Degree sequence indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.rows().iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_mask(&self, start: usize, within: u32) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Connected with exactly `n + 1` edges.
    pub fn is_bicyclic(&self) -> bool {
        self.m() == self.n + 1 && self.is_connected()
    }

    pub(crate) fn require_bicyclic(&self) -> Result<(), GraphError> {
        if self.is_bicyclic() {
            Ok(())
        } else {
            Err(GraphError::NotBicyclic {
                n: self.n,
                m: self.m(),
                connected: self.is_connected(),
            })
        }
    }

    /// Vertices lying on at least one cycle.
    ///
    /// A vertex is on a cycle exactly when one of its edges is not a bridge.
    pub fn cycle_vertices(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(Bits(self.cycle_vertex_mask()).collect())
    }

    pub(crate) fn cycle_vertex_mask(&self) -> u32 {
        let all = self.vertex_mask();
        let mut on_cycle = 0u32;
        for (u, v) in self.edges() {
            if on_cycle & (1 << u) != 0 && on_cycle & (1 << v) != 0 {
                continue;
            }
            let mut h = *self;
            h.adj[u] &= !(1 << v);
            h.adj[v] &= !(1 << u);
            if h.component_mask(u, all) & (1 << v) != 0 {
                on_cycle |= (1 << u) | (1 << v);
            }
        }
        on_cycle
    }

    /// Degree-1 vertices as a bitset.
    pub fn pendant_mask(&self) -> u32 {
        let mut mask = 0;
        for (v, row) in self.rows().iter().enumerate() {
            if row.count_ones() == 1 {
                mask |= 1 << v;
            }
        }
        mask
    }

    /// Subgraph induced by `mask`, relabelled to `0..|mask|` in increasing
    /// vertex order. Returns `None` for an empty mask.
    pub fn induced(&self, mask: u32) -> Option<Graph> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return None;
        }
        let verts: Vec<usize> = Bits(mask).collect();
        let mut rows = [0u32; MAX_VERTICES];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.adj[u] & (1 << v) != 0 {
                    rows[i] |= 1 << j;
                }
            }
        }
        Some(Graph::from_rows(verts.len(), &rows))
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = [0u32; MAX_VERTICES];
        for u in 0..self.n {
            for v in Bits(self.adj[u]) {
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        Graph::from_rows(self.n, &rows)
    }

    /// Same graph with edge `uv` added (or kept).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut g = *self;
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    /// Same graph with edge `uv` removed (or kept absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = *self;
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Appends a vertex adjacent to the vertices in `nbrs`; returns the new graph
    /// and the index of the new vertex.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Result<(Graph, usize), GraphError> {
        if self.n == MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        let mut g = *self;
        let w = g.n;
        g.n += 1;
        for &u in nbrs {
            self.check_vertex(u)?;
            g.adj[u] |= 1 << w;
            g.adj[w] |= 1 << u;
        }
        Ok((g, w))
    }

    /// Two-colouring if the graph is bipartite (every component coloured
    /// independently). Bit `v` of the result is the colour of `v`.
    pub fn bipartition(&self) -> Option<u32> {
        let mut colour = 0u32;
        let mut seen = 0u32;
        for s in 0..self.n {
            if seen & (1 << s) != 0 {
                continue;
            }
            let mut stack = vec![s];
            seen |= 1 << s;
            while let Some(u) = stack.pop() {
                let cu = colour >> u & 1;
                for v in Bits(self.adj[u]) {
                    if seen & (1 << v) == 0 {
                        seen |= 1 << v;
                        colour |= (cu ^ 1) << v;
                        stack.push(v);
                    } else if colour >> v & 1 == cu {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

/// Common small graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("valid complete graph")
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::new(k + 1, &edges).expect("valid star")
    }

    /// Two triangles sharing vertex 0.
    pub fn bowtie() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("valid bowtie")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn triangle_from_edges() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g, cycle(3));
    }

    #[test]
    fn bowtie_is_bicyclic() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (1, 0)]).unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(g.m(), g.n() + 1);
        assert!(g.is_bicyclic());
        assert_eq!(g.degree(0).unwrap(), 4);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::empty(33), Err(GraphError::TooManyVertices(33)));
        assert!(cycle(3).degree(3).is_err());
        assert!(cycle(3).neighbors(5).is_err());
    }

    #[test]
    fn degrees() {
        assert!((0..3).all(|v| cycle(3).degree(v).unwrap() == 2));
        assert_eq!(star(4).degree(0).unwrap(), 4);
        assert_eq!(star(4).neighbors(0).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn connectivity() {
        assert!(cycle(3).is_connected());
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(two_edges.cycle_vertices().is_err());
    }

    #[test]
    fn bicyclic_recognition() {
        assert!(bowtie().is_bicyclic());
        assert!(!cycle(5).is_bicyclic());
        assert!(!complete(4).is_bicyclic());
        assert!(complete(4).without_edge(0, 1).unwrap().is_bicyclic());
    }

    #[test]
    fn cycle_vertices_of_joined_triangles() {
        assert_eq!(bowtie().cycle_vertices().unwrap(), vec![0, 1, 2, 3, 4]);
        // B(3,3,3): triangles {0,1,2} and {4,5,6} joined through 3.
        let g = Graph::new(
            7,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 6), (6, 4)],
        )
        .unwrap();
        assert_eq!(g.cycle_vertices().unwrap(), vec![0, 1, 2, 4, 5, 6]);
        assert!(path(4).cycle_vertices().unwrap().is_empty());
    }

    #[test]
    fn induced_and_relabel() {
        let g = bowtie();
        let h = g.induced(0b00111).unwrap();
        assert_eq!(h, cycle(3));
        let r = g.relabel(&[4, 3, 2, 1, 0]);
        assert_eq!(r.degree(4).unwrap(), 4);
        assert_eq!(r.m(), 6);
        assert!(g.induced(0).is_none());
    }

    #[test]
    fn bipartite_detection() {
        assert!(cycle(6).bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
        let c = path(4).bipartition().unwrap();
        assert_ne!(c & 1, c >> 1 & 1);
    }
}
