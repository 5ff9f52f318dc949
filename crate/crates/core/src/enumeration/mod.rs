//! Isomorphism-free generation of connected bicyclic graphs.
//!
//! Structured mode walks every base (`B(p,l,q)` and `P(l,p,q)`) and hangs a
//! rooted tree from each base vertex, keeping only decorations that are
//! lexicographically maximal under the base's automorphisms. Two decorated
//! bases are isomorphic exactly when their bases agree and the decorations
//! differ by a base automorphism, so this already yields one graph per
//! class; a per-base canonical dedupe stays on as a safety net.
//!
//! Brute-force mode is an independent oracle: every spanning tree class plus
//! every pair of extra edges, deduplicated canonically.

mod brute;
mod trees;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exec::Exec;
use crate::families::BaseKind;
use crate::graph::{canonical_form, CanonicalLabel, Graph, MAX_VERTICES};
use crate::invariants::independence_number;

pub use brute::{enumerate_bruteforce, enumerate_labeled_exhaustive, free_trees};
use trees::{RootedTrees, TreeKey};

/// Largest `n` accepted by brute-force mode.
pub const BRUTEFORCE_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("no bicyclic graph has {0} vertices (need n >= 4)")]
    TooSmall(usize),
    #[error("n = {n} is outside the supported range {min}..={max} for this mode")]
    OutOfRange { n: usize, min: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Structured,
    Bruteforce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub n: usize,
    pub mode: Mode,
    /// Keep only graphs with this independence number.
    pub alpha: Option<usize>,
    pub exec: Exec,
}

impl EnumerationConfig {
    pub fn new(n: usize) -> Self {
        EnumerationConfig {
            n,
            mode: Mode::Structured,
            alpha: None,
            exec: Exec::default(),
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn alpha(mut self, alpha: Option<usize>) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    fn validate(&self) -> Result<(), EnumerationError> {
        if self.n < 4 {
            return Err(EnumerationError::TooSmall(self.n));
        }
        let max = match self.mode {
            Mode::Structured => MAX_VERTICES,
            Mode::Bruteforce => BRUTEFORCE_MAX_N,
        };
        if self.n > max {
            return Err(EnumerationError::OutOfRange {
                n: self.n,
                min: 4,
                max,
            });
        }
        Ok(())
    }
}

/// Every base on at most `n` vertices, in stream order.
pub fn bases_up_to(n: usize) -> Vec<BaseKind> {
    let mut out = Vec::new();
    for p in 3..=n {
        for q in p..=n {
            for l in 1..=n {
                if p + q + l - 2 <= n {
                    out.push(BaseKind::B1 { p, l, q });
                }
            }
        }
    }
    for l in 0..=n {
        for p in l.max(1)..=n {
            for q in p..=n {
                if l + p + q + 2 <= n {
                    out.push(BaseKind::B2 { l, p, q });
                }
            }
        }
    }
    out
}

/// Graphs produced for one base, with the raw count before the safety-net
/// dedupe (equal to `graphs.len()` when orbit pruning is exact).
#[derive(Debug, Clone)]
pub struct BaseBatch {
    pub base: BaseKind,
    pub raw: usize,
    pub graphs: Vec<Graph>,
}

/// All automorphisms of a small graph, by backtracking.
fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, image: &mut Vec<usize>, used: u32, out: &mut Vec<Vec<usize>>) {
        let v = image.len();
        if v == g.n() {
            out.push(image.clone());
            return;
        }
        for w in 0..g.n() {
            if used >> w & 1 == 1 || g.adjacency(w).count_ones() != g.adjacency(v).count_ones() {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w)) {
                image.push(w);
                extend(g, image, used | 1 << w, out);
                image.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, &mut Vec::new(), 0, &mut out);
    out
}

/// Compositions of `total` into `parts` non-negative parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            acc.push(total);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for k in 0..=total {
            acc.push(k);
            go(total - k, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

fn decorate(base: &Graph, trees: &RootedTrees, deco: &[TreeKey], n: usize) -> Graph {
    let mut edges = base.edges();
    let mut next = base.n();
    let mut map = Vec::new();
    for (v, &key) in deco.iter().enumerate() {
        let parent = trees.get(key);
        map.clear();
        map.push(v);
        for &p in &parent[1..] {
            edges.push((map[p as usize], next));
            map.push(next);
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Graph::new(n, &edges).expect("decorated base is a valid graph")
}

/// Lexicographically maximal in its orbit under the base automorphisms.
fn is_orbit_max(deco: &[TreeKey], auts: &[Vec<usize>]) -> bool {
    auts.iter().all(|sigma| {
        // Compare deco with deco∘sigma.
        for (v, &s) in sigma.iter().enumerate() {
            match deco[v].cmp(&deco[s]) {
                std::cmp::Ordering::Greater => return true,
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
        true
    })
}

fn for_each_decoration(
    trees: &RootedTrees,
    sizes: &[usize],
    acc: &mut Vec<TreeKey>,
    f: &mut dyn FnMut(&[TreeKey]),
) {
    let v = acc.len();
    if v == sizes.len() {
        f(acc);
        return;
    }
    for idx in 0..trees.count(sizes[v]) {
        acc.push((sizes[v] as u8, idx as u16));
        for_each_decoration(trees, sizes, acc, f);
        acc.pop();
    }
}

fn base_batch(kind: BaseKind, n: usize, trees: &RootedTrees, alpha: Option<usize>, exec: Exec) -> BaseBatch {
    let base = kind.build();
    let auts = automorphisms(&base);
    let b = base.n();
    let comps = compositions(n - b, b);
    let chunks: Vec<Vec<(CanonicalLabel, Graph)>> = exec.map(comps, |extra| {
        let sizes: Vec<usize> = extra.iter().map(|e| e + 1).collect();
        let mut out = Vec::new();
        for_each_decoration(trees, &sizes, &mut Vec::with_capacity(b), &mut |deco| {
            if !is_orbit_max(deco, &auts) {
                return;
            }
            let g = decorate(&base, trees, deco, n);
            if alpha.is_some_and(|a| independence_number(&g).0 != a) {
                return;
            }
            out.push((canonical_form(&g), g));
        });
        out
    });
    let raw = chunks.iter().map(Vec::len).sum();
    let unique: BTreeMap<CanonicalLabel, Graph> = chunks.into_iter().flatten().collect();
    BaseBatch {
        base: kind,
        raw,
        graphs: unique.into_values().collect(),
    }
}

/// Streaming iterator over the structured enumeration, one base at a time.
pub struct BicyclicStream {
    n: usize,
    alpha: Option<usize>,
    exec: Exec,
    trees: RootedTrees,
    bases: std::vec::IntoIter<BaseKind>,
}

impl Iterator for BicyclicStream {
    type Item = BaseBatch;

    fn next(&mut self) -> Option<BaseBatch> {
        let kind = self.bases.next()?;
        Some(base_batch(kind, self.n, &self.trees, self.alpha, self.exec))
    }
}

/// Structured enumeration as a stream of per-base batches.
pub fn structured_batches(cfg: &EnumerationConfig) -> Result<BicyclicStream, EnumerationError> {
    cfg.validate()?;
    Ok(BicyclicStream {
        n: cfg.n,
        alpha: cfg.alpha,
        exec: cfg.exec,
        trees: RootedTrees::up_to(cfg.n),
        bases: bases_up_to(cfg.n).into_iter(),
    })
}

/// One representative per isomorphism class of connected bicyclic graphs on
/// `cfg.n` vertices (optionally with fixed independence number).
///
/// Structured mode streams base by base, each base's graphs ordered by
/// canonical label; brute-force mode is ordered by canonical label.
pub fn enumerate_bicyclic(cfg: &EnumerationConfig) -> Result<Box<dyn Iterator<Item = Graph>>, EnumerationError> {
    cfg.validate()?;
    match cfg.mode {
        Mode::Structured => Ok(Box::new(structured_batches(cfg)?.flat_map(|b| b.graphs))),
        Mode::Bruteforce => {
            let all = enumerate_bruteforce(cfg.n)?;
            Ok(Box::new(restrict_alpha(all.into_iter(), cfg.alpha)))
        }
    }
}

/// Keeps graphs with independence number `alpha` (everything for `None`).
pub fn restrict_alpha<I>(stream: I, alpha: Option<usize>) -> impl Iterator<Item = Graph>
where
    I: Iterator<Item = Graph>,
{
    stream.filter(move |g| alpha.is_none_or(|a| independence_number(g).0 == a))
}
