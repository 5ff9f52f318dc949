//! Exact canonical labeling by partition refinement and backtracking.
//!
//! The search individualizes vertices of the first non-singleton cell,
//! refines to an equitable partition, and keeps the lexicographically largest
//! relabelled adjacency matrix over all discrete leaves. Leaves that produce
//! the same matrix as the current best yield automorphisms; these prune
//! siblings that lie in a common orbit of the pointwise stabilizer of the
//! current prefix.

use super::{Bits, Graph, GraphError, MAX_VERTICES};

/// Total-order key: two graphs get equal labels iff they are isomorphic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel {
    n: u8,
    rows: [u32; MAX_VERTICES],
}

impl CanonicalLabel {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Serialized key: vertex count followed by the canonical rows, little endian.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + 4 * self.n());
        out.push(self.n);
        for r in &self.rows[..self.n()] {
            out.extend_from_slice(&r.to_le_bytes());
        }
        out
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        Graph::from_rows(self.n(), &self.rows)
    }
}

impl std::fmt::Debug for CanonicalLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalLabel({})", super::to_graph6(&self.to_graph()))
    }
}

/// Canonical label with the default bound of 32 vertices.
pub fn canonical_form(g: &Graph) -> CanonicalLabel {
    canonical_form_with_bound(g, MAX_VERTICES).expect("every Graph fits the default bound")
}

pub fn canonical_form_with_bound(g: &Graph, bound: usize) -> Result<CanonicalLabel, GraphError> {
    if g.n() > bound {
        return Err(GraphError::AboveCanonicalBound { n: g.n(), bound });
    }
    let mut search = Search {
        g,
        best: None,
        autos: Vec::new(),
    };
    let mut prefix = Vec::new();
    search.descend(vec![g.vertex_mask()], &mut prefix);
    let (rows, _) = search.best.expect("search visits at least one leaf");
    Ok(CanonicalLabel {
        n: g.n() as u8,
        rows,
    })
}

struct Search<'a> {
    g: &'a Graph,
    /// Best leaf so far: relabelled rows and the vertex at each position.
    best: Option<([u32; MAX_VERTICES], Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<u32>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(ti) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[ti];
        let mut tried: Vec<usize> = Vec::new();
        for w in Bits(target) {
            if !tried.is_empty() {
                let orbits = self.stabilizer_orbits(prefix);
                if tried.iter().any(|&t| orbits.find(t) == orbits.find(w)) {
                    continue;
                }
            }
            tried.push(w);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..ti]);
            next.push(1 << w);
            next.push(target & !(1 << w));
            next.extend_from_slice(&cells[ti + 1..]);
            prefix.push(w);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[u32]) {
        let n = self.g.n();
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut rows = [0u32; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            for u in Bits(self.g.adjacency(v)) {
                rows[i] |= 1 << pos[u];
            }
        }
        match &self.best {
            Some((best_rows, best_order)) => match rows[..n].cmp(&best_rows[..n]) {
                std::cmp::Ordering::Greater => self.best = Some((rows, order)),
                std::cmp::Ordering::Equal => {
                    let sigma: Vec<usize> = (0..n).map(|v| best_order[pos[v]]).collect();
                    if sigma.iter().enumerate().any(|(i, &s)| i != s) {
                        self.autos.push(sigma);
                    }
                }
                std::cmp::Ordering::Less => {}
            },
            None => self.best = Some((rows, order)),
        }
    }

    fn stabilizer_orbits(&self, prefix: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.g.n());
        for sigma in &self.autos {
            if prefix.iter().all(|&p| sigma[p] == p) {
                for (v, &s) in sigma.iter().enumerate() {
                    uf.union(v, s);
                }
            }
        }
        uf
    }
}

/// Refines an ordered partition until it is equitable. Each cell splits by
/// the vector of neighbour counts into every cell; sub-cells are ordered by
/// that vector, which keeps the result isomorphism-invariant.
fn refine(g: &Graph, cells: &mut Vec<u32>) {
    loop {
        let mut next: Vec<u32> = Vec::with_capacity(g.n());
        let mut split = false;
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = Bits(cell)
                .map(|v| {
                    let row = g.adjacency(v);
                    let sig = cells.iter().map(|c| (row & c).count_ones() as u8).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut cur = 0u32;
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(cur);
                    cur = 0;
                    split = true;
                }
                cur |= 1 << keyed[i].1;
            }
            next.push(cur);
        }
        *cells = next;
        if !split {
            return;
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
