//! Shared generators, brute-force oracles and property suites used by the
//! `properties` and `acceptance` targets.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bicyclic::enumeration::{enumerate_bicyclic, EnumerationConfig};
use bicyclic::graph::Bits;
use bicyclic::invariants::{
    alpha_floor_characterization, edge_cover_number, independence_number, matching_number, vertex_cover_number,
};
use bicyclic::spectral::{char_poly, compare_radii, power_iteration, schwenk_delete, spectral_radius, sqrt_delta_bound_check};
use bicyclic::transforms::{graft_pair, is_rho_increasing, rotate_edges, RotationMove, TransformError};
use bicyclic::Graph;

/// Outcome of one property suite.
#[derive(Debug)]
pub struct Suite {
    pub name: &'static str,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            cases: 0,
            violations: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.violations.len() < 20 {
            self.violations.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!("{}: {} cases, {} violations {:?}", self.name, self.cases, self.violations.len(), self.violations)
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All bicyclic graphs on `n` vertices, cached per test binary.
pub fn bicyclic(n: usize) -> Vec<Graph> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<Graph>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let v: Vec<Graph> = enumerate_bicyclic(&EnumerationConfig::new(n)).unwrap().collect();
    cache.lock().unwrap().insert(n, v.clone());
    v
}

/// Random connected graph: a random labelled tree plus `extra` random edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let mut g = Graph::new(n, &edges).unwrap();
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && !g.has_edge(a, b) {
            g = g.with_edge(a, b).unwrap();
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// Random graph with each edge present with probability `p`.
pub fn random_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn is_independent(g: &Graph, set: u32) -> bool {
    Bits(set).all(|v| g.adjacency(v) & set == 0)
}

/// Independence number by scanning all `2^n` subsets.
pub fn brute_alpha(g: &Graph) -> usize {
    (0u32..1 << g.n()).filter(|&s| is_independent(g, s)).map(|s| s.count_ones() as usize).max().unwrap()
}

/// Matching number by exhaustive search over edge subsets.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], used: u32) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(a, b), rest)) => {
                let skip = go(rest, used);
                if used & (1 << a | 1 << b) == 0 {
                    skip.max(1 + go(rest, used | 1 << a | 1 << b))
                } else {
                    skip
                }
            }
        }
    }
    go(&g.edges(), 0)
}

/// Cycle vertices: endpoints of edges whose removal keeps their ends
/// connected.
pub fn brute_cycle_vertices(g: &Graph) -> Vec<usize> {
    let mut on = vec![false; g.n()];
    for (a, b) in g.edges() {
        let h = g.without_edge(a, b).unwrap();
        if h.component_mask(a, h.vertex_mask()) >> b & 1 == 1 {
            on[a] = true;
            on[b] = true;
        }
    }
    (0..g.n()).filter(|&v| on[v]).collect()
}

/// Schwenk's recursion against the direct characteristic polynomial on
/// every bicyclic graph with `n <= 8` and `random` random graphs, `n <= 10`.
pub fn schwenk_suite(random: usize) -> Suite {
    let mut s = Suite::new("Schwenk deletion formula");
    let mut graphs: Vec<Graph> = (4..=8).flat_map(bicyclic).collect();
    let mut r = rng(7);
    for _ in 0..random {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.1..0.8);
        graphs.push(random_gnp(&mut r, n, p));
    }
    for g in &graphs {
        let phi = char_poly(g);
        for v in 0..g.n() {
            s.record(schwenk_delete(g, v) == phi, || format!("{g} at {v}"));
        }
    }
    s
}

/// Rotation lemma: valid moves with `x_u >= x_v` strictly increase rho.
pub fn rotation_suite(target: usize) -> Suite {
    let mut s = Suite::new("rotation lemma");
    let mut r = rng(11);
    while s.cases < target {
        let n = r.gen_range(4..=10);
        let extra = r.gen_range(0..=n);
        let g = random_connected(&mut r, n, extra);
        let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
        if u == v {
            continue;
        }
        let pool: Vec<usize> = Bits(g.adjacency(v) & !g.adjacency(u) & !(1 << u)).collect();
        if pool.is_empty() {
            continue;
        }
        let k = r.gen_range(1..=pool.len());
        let moved: Vec<usize> = pool.choose_multiple(&mut r, k).copied().collect();
        let mv = RotationMove::new(u, v, moved);
        match is_rho_increasing(&g, &mv) {
            Ok(true) => {
                let h = rotate_edges(&g, &mv).unwrap();
                let grows = compare_radii(&h, &g) == Ordering::Greater;
                let sizes = h.n() == g.n() && h.m() == g.m();
                s.record(grows && sizes, || format!("{g} u={u} v={v} s={:?}", mv.s));
            }
            Ok(false) | Err(TransformError::Disconnects) => {}
            Err(e) => panic!("unexpected rotation error {e}"),
        }
    }
    s
}

/// Grafting lemma: `rho(G_{k,m}) > rho(G_{k+1,m-1})`.
pub fn grafting_suite(target: usize) -> Suite {
    let mut s = Suite::new("grafting lemma");
    let mut r = rng(13);
    while s.cases < target {
        let n = r.gen_range(2..=8);
        let extra = r.gen_range(0..=n);
        let g = random_connected(&mut r, n, extra);
        let v = r.gen_range(0..n);
        let m = r.gen_range(1..=4);
        let k = r.gen_range(m..=m + 3);
        let (a, b) = graft_pair(&g, v, k, m).unwrap();
        s.record(compare_radii(&a, &b) == Ordering::Greater, || format!("{g} v={v} k={k} m={m}"));
    }
    s
}

/// `rho >= sqrt(max degree)` on every bicyclic graph up to `n_max` and on
/// random connected graphs.
pub fn sqrt_delta_suite(n_max: usize, random: usize) -> Suite {
    let mut s = Suite::new("rho >= sqrt(max degree)");
    let mut graphs: Vec<Graph> = (4..=n_max).flat_map(bicyclic).collect();
    let mut r = rng(17);
    for _ in 0..random {
        let n = r.gen_range(2..=12);
        let extra = r.gen_range(0..=2 * n);
        graphs.push(random_connected(&mut r, n, extra));
    }
    for g in &graphs {
        s.record(sqrt_delta_bound_check(g), || g.to_string());
    }
    s
}

/// Gallai: `alpha + beta = n` and `alpha' + beta' = n` on connected graphs
/// without isolated vertices, with the matching number also checked
/// against exhaustive search on small graphs.
pub fn gallai_suite(count: usize) -> Suite {
    let mut s = Suite::new("Gallai identities");
    let mut r = rng(19);
    for _ in 0..count {
        let n = r.gen_range(2..=12);
        let extra = r.gen_range(0..=2 * n);
        let g = random_connected(&mut r, n, extra);
        let (alpha, _) = independence_number(&g);
        let beta = vertex_cover_number(&g);
        let nu = matching_number(&g);
        let rho = edge_cover_number(&g).unwrap();
        let oracle = g.m() > 16 || brute_matching(&g) == nu;
        s.record(alpha + beta == n && nu + rho == n && oracle, || {
            format!("{g}: alpha={alpha} beta={beta} alpha'={nu} beta'={rho}")
        });
    }
    s
}

/// König: `alpha = beta'` (and `alpha' = beta`) on bipartite graphs without
/// isolated vertices.
pub fn koenig_suite(count: usize) -> Suite {
    let mut s = Suite::new("Koenig identities");
    let mut r = rng(23);
    while s.cases < count {
        let (a, b) = (r.gen_range(1..=6), r.gen_range(1..=6));
        let p = r.gen_range(0.2..0.9);
        let mut edges = Vec::new();
        for x in 0..a {
            for y in 0..b {
                if r.gen_bool(p) {
                    edges.push((x, a + y));
                }
            }
        }
        let g = Graph::new(a + b, &edges).unwrap();
        if g.degrees().contains(&0) {
            continue;
        }
        let (alpha, _) = independence_number(&g);
        let ok = alpha == edge_cover_number(&g).unwrap() && matching_number(&g) == vertex_cover_number(&g);
        s.record(ok, || g.to_string());
    }
    s
}

/// Branch-and-bound independence number against `2^n` enumeration.
pub fn mis_suite(count: usize) -> Suite {
    let mut s = Suite::new("independence number vs exhaustive search");
    let mut r = rng(29);
    for _ in 0..count {
        let n = r.gen_range(1..=16);
        let p = r.gen_range(0.05..0.7);
        let g = random_gnp(&mut r, n, p);
        let (alpha, witness) = independence_number(&g);
        let set = witness.iter().fold(0u32, |m, &v| m | 1 << v);
        let ok = alpha == brute_alpha(&g) && witness.len() == alpha && is_independent(&g, set);
        s.record(ok, || g.to_string());
    }
    s
}

/// Pendant bound `k <= alpha` and the floor `alpha >= ceil((n-2)/2)` on
/// every bicyclic graph up to `n_max`.
pub fn pendant_and_floor_suite(n_max: usize) -> Suite {
    let mut s = Suite::new("pendant bound and alpha floor");
    for n in 4..=n_max {
        for g in bicyclic(n) {
            let (alpha, _) = independence_number(&g);
            let pendants = g.pendant_mask().count_ones() as usize;
            s.record(pendants <= alpha && alpha >= (n - 2).div_ceil(2), || g.to_string());
        }
    }
    s
}

/// Floor characterization: `alpha = (n-2)/2` iff the structural predicate,
/// over every bicyclic graph on even `n <= n_max`.
pub fn floor_characterization_suite(n_max: usize) -> Suite {
    let mut s = Suite::new("alpha = (n-2)/2 characterization");
    for n in (4..=n_max).step_by(2) {
        for g in bicyclic(n) {
            let (alpha, _) = independence_number(&g);
            let predicate = alpha_floor_characterization(&g).unwrap();
            s.record(predicate == (2 * alpha + 2 == n), || format!("{g}: alpha={alpha} predicate={predicate}"));
        }
    }
    s
}

/// Certificates agree with an independent power-iteration estimate, Perron vectors are
/// positive unit vectors, and `compare_radii` is antisymmetric and agrees
/// with well-separated floats.
pub fn certificate_suite(count: usize) -> Suite {
    let mut s = Suite::new("spectral certificates");
    let mut r = rng(31);
    for _ in 0..count {
        let n = r.gen_range(2..=10);
        let e1 = r.gen_range(0..=n);
        let e2 = r.gen_range(0..=n);
        let g = random_connected(&mut r, n, e1);
        let h = random_connected(&mut r, n, e2);
        let (cg, ch) = (spectral_radius(&g).unwrap(), spectral_radius(&h).unwrap());
        let norm: f64 = cg.perron.iter().map(|x| x * x).sum::<f64>().sqrt();
        let perron_ok = cg.perron.iter().all(|&x| x > 0.0) && (norm - 1.0).abs() < 1e-12;
        let (gh, hg) = (compare_radii(&g, &h), compare_radii(&h, &g));
        let floats = if (cg.rho - ch.rho).abs() > 1e-6 {
            gh == cg.rho.partial_cmp(&ch.rho).unwrap()
        } else {
            true
        };
        let (estimate, _) = power_iteration(&g, 200_000, 1e-14);
        let agrees = cg.lo_f64() - 1e-7 <= estimate && estimate <= cg.hi_f64() + 1e-7 && cg.contains(cg.rho);
        s.record(agrees && perron_ok && gh == hg.reverse() && floats, || {
            format!("{g} vs {h}: {gh:?}/{hg:?}")
        });
    }
    s
}
