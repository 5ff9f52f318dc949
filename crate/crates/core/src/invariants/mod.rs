//! Independence, matching and covering numbers, pendant structure, and the
//! test for bicyclic graphs with independence number `(n - 2) / 2`.

mod matching;

use thiserror::Error;

use crate::families::{base, BaseKind};
use crate::graph::{Bits, Graph, GraphError};

pub use matching::maximum_matching;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn mask_of(vs: impl IntoIterator<Item = usize>) -> u32 {
    vs.into_iter().fold(0, |m, v| m | 1 << v)
}

/// Greedy clique cover of `p`: an upper bound on any independent subset.
fn clique_cover_bound(g: &Graph, mut p: u32) -> u32 {
    let mut cliques = 0;
    while p != 0 {
        let v = p.trailing_zeros();
        let mut clique_cand = g.adjacency(v as usize) & p;
        p &= !(1 << v);
        while clique_cand != 0 {
            let u = clique_cand.trailing_zeros();
            p &= !(1 << u);
            clique_cand &= g.adjacency(u as usize) & !(1 << u);
        }
        cliques += 1;
    }
    cliques
}

fn mis(g: &Graph, p: u32, current: u32, best: &mut u32) {
    if p == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + clique_cover_bound(g, p) <= best.count_ones() {
        return;
    }
    // Vertices of degree <= 1 in p are always safe to take.
    if let Some(v) = Bits(p).find(|&v| (g.adjacency(v) & p).count_ones() <= 1) {
        return mis(g, p & !(1 << v) & !g.adjacency(v), current | 1 << v, best);
    }
    let v = Bits(p)
        .max_by_key(|&v| (g.adjacency(v) & p).count_ones())
        .unwrap();
    mis(g, p & !(1 << v), current, best);
    mis(g, p & !(1 << v) & !g.adjacency(v), current | 1 << v, best);
}

/// A maximum independent set, sorted.
pub fn maximum_independent_set(g: &Graph) -> Vec<usize> {
    let mut best = 0;
    mis(g, g.vertex_mask(), 0, &mut best);
    Bits(best).collect()
}

/// `alpha(g)` with a witness set.
pub fn independence_number(g: &Graph) -> (usize, Vec<usize>) {
    let w = maximum_independent_set(g);
    (w.len(), w)
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

fn cover(g: &Graph, uncovered: &[(usize, usize)], chosen: u32, best: &mut u32) {
    let rest: Vec<(usize, usize)> = uncovered
        .iter()
        .copied()
        .filter(|&(u, v)| chosen & (1 << u | 1 << v) == 0)
        .collect();
    if rest.is_empty() {
        if chosen.count_ones() < best.count_ones() {
            *best = chosen;
        }
        return;
    }
    // Lower bound: a greedy matching on the uncovered edges.
    let mut used = 0u32;
    let mut lb = 0;
    for &(u, v) in &rest {
        if used & (1 << u | 1 << v) == 0 {
            used |= 1 << u | 1 << v;
            lb += 1;
        }
    }
    if chosen.count_ones() + lb >= best.count_ones() {
        return;
    }
    let mut deg = [0u32; 32];
    for &(u, v) in &rest {
        deg[u] += 1;
        deg[v] += 1;
    }
    let v = (0..g.n()).max_by_key(|&v| deg[v]).unwrap();
    cover(g, &rest, chosen | 1 << v, best);
    // v left out: every uncovered neighbour must be taken.
    let nbrs = rest
        .iter()
        .filter_map(|&(a, b)| (a == v).then_some(b).or((b == v).then_some(a)));
    cover(g, &rest, chosen | mask_of(nbrs), best);
}

/// Minimum vertex cover size, by its own branch and bound.
pub fn vertex_cover_number(g: &Graph) -> usize {
    let mut best = g.vertex_mask();
    cover(g, &g.edges(), 0, &mut best);
    best.count_ones() as usize
}

/// Minimum edge cover: a maximum matching plus one edge per unmatched vertex.
pub fn minimum_edge_cover(g: &Graph) -> Result<Vec<(usize, usize)>, InvariantError> {
    if let Some(v) = (0..g.n()).find(|&v| g.adjacency(v) == 0) {
        return Err(InvariantError::IsolatedVertex(v));
    }
    let mut edges = maximum_matching(g);
    let matched = edges.iter().fold(0u32, |m, &(u, v)| m | 1 << u | 1 << v);
    for v in Bits(g.vertex_mask() & !matched) {
        let u = g.adjacency(v).trailing_zeros() as usize;
        edges.push((u.min(v), u.max(v)));
    }
    Ok(edges)
}

pub fn edge_cover_number(g: &Graph) -> Result<usize, InvariantError> {
    minimum_edge_cover(g).map(|e| e.len())
}

/// `alpha = alpha'` on a bipartite graph without isolated vertices.
pub fn is_koenig_consistent(g: &Graph) -> Result<bool, InvariantError> {
    if g.bipartition().is_none() {
        return Err(InvariantError::NotBipartite);
    }
    if let Some(v) = (0..g.n()).find(|&v| g.adjacency(v) == 0) {
        return Err(InvariantError::IsolatedVertex(v));
    }
    Ok(independence_number(g).0 == matching_number(g))
}

pub fn pendant_vertices(g: &Graph) -> Vec<usize> {
    Bits(g.pendant_mask()).collect()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n() % 2 == 0 && 2 * matching_number(g) == g.n()
}

/// Vertices of degree at least 2 with no pendant neighbour.
pub fn v_prime_set(g: &Graph) -> Vec<usize> {
    let pendants = g.pendant_mask();
    (0..g.n())
        .filter(|&v| g.adjacency(v).count_ones() >= 2 && g.adjacency(v) & pendants == 0)
        .collect()
}

/// Whether the base is `B(p, l, q)` with `l >= 2`, `p` and `q` odd, and
/// `G - V_c(G)` has a perfect matching (vacuous when empty).
pub fn alpha_floor_characterization(g: &Graph) -> Result<bool, GraphError> {
    let (_, kind) = base(g)?;
    let BaseKind::B1 { p, l, q } = kind else {
        return Ok(false);
    };
    if l < 2 || p % 2 == 0 || q % 2 == 0 {
        return Ok(false);
    }
    let rest = g.vertex_mask() & !g.cycle_vertex_mask();
    Ok(match g.induced(rest) {
        None => true,
        Some(h) => has_perfect_matching(&h),
    })
}

/// All scalar invariants of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantSummary {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub alpha_prime: usize,
    pub beta: usize,
    /// `None` when the graph has an isolated vertex.
    pub beta_prime: Option<usize>,
    pub pendants: usize,
    pub v_prime: usize,
}

impl InvariantSummary {
    pub fn of(g: &Graph) -> Self {
        InvariantSummary {
            n: g.n(),
            m: g.m(),
            alpha: independence_number(g).0,
            alpha_prime: matching_number(g),
            beta: vertex_cover_number(g),
            beta_prime: edge_cover_number(g).ok(),
            pendants: g.pendant_mask().count_ones() as usize,
            v_prime: v_prime_set(g).len(),
        }
    }

    pub const CSV_HEADER: &'static str = "n,m,alpha,alphaPrime,beta,betaPrime,pendants,vPrime";

    pub fn csv_row(&self) -> String {
        let bp = self.beta_prime.map_or_else(String::new, |b| b.to_string());
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n, self.m, self.alpha, self.alpha_prime, self.beta, bp, self.pendants, self.v_prime
        )
    }
}
