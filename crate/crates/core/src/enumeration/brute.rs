//! Oracle enumerations that share no code with the structured generator.

use std::collections::BTreeSet;

use super::{EnumerationError, BRUTEFORCE_MAX_N};
use crate::graph::{canonical_form, CanonicalLabel, Graph};

/// One representative of every unlabeled tree on `n` vertices, grown leaf by
/// leaf with canonical dedupe.
pub fn free_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut level: BTreeSet<CanonicalLabel> = BTreeSet::from([canonical_form(&Graph::empty(1).unwrap())]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for t in &level {
            let t = t.to_graph();
            for v in 0..t.n() {
                let (g, _) = t.with_vertex(&[v]).expect("tree stays within bounds");
                next.insert(canonical_form(&g));
            }
        }
        level = next;
    }
    level.iter().map(CanonicalLabel::to_graph).collect()
}

/// Every connected bicyclic graph contains a spanning tree, so it arises
/// from some unlabeled tree by adding two non-edges.
pub fn enumerate_bruteforce(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if n < 4 {
        return Err(EnumerationError::TooSmall(n));
    }
    if n > BRUTEFORCE_MAX_N {
        return Err(EnumerationError::OutOfRange {
            n,
            min: 4,
            max: BRUTEFORCE_MAX_N,
        });
    }
    let mut seen = BTreeSet::new();
    for t in free_trees(n) {
        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !t.has_edge(u, v))
            .collect();
        for (i, &(a, b)) in non_edges.iter().enumerate() {
            let h = t.with_edge(a, b).unwrap();
            for &(c, d) in &non_edges[i + 1..] {
                seen.insert(canonical_form(&h.with_edge(c, d).unwrap()));
            }
        }
    }
    Ok(seen.iter().map(CanonicalLabel::to_graph).collect())
}

/// Literal oracle: every labeled edge set of size `n + 1`, kept when
/// connected. Exponential; limited to `n <= 7`.
pub fn enumerate_labeled_exhaustive(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if !(4..=7).contains(&n) {
        return Err(EnumerationError::OutOfRange { n, min: 4, max: 7 });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    let mut chosen = Vec::with_capacity(n + 1);
    fn go(
        n: usize,
        pairs: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        seen: &mut BTreeSet<CanonicalLabel>,
    ) {
        if chosen.len() == n + 1 {
            let g = Graph::new(n, chosen).unwrap();
            if g.is_connected() {
                seen.insert(canonical_form(&g));
            }
            return;
        }
        for i in start..pairs.len() {
            if pairs.len() - i < n + 1 - chosen.len() {
                break;
            }
            chosen.push(pairs[i]);
            go(n, pairs, i + 1, chosen, seen);
            chosen.pop();
        }
    }
    go(n, &pairs, 0, &mut chosen, &mut seen);
    Ok(seen.iter().map(CanonicalLabel::to_graph).collect())
}
