//! Maximum matching in general graphs (Edmonds' blossom algorithm).

use crate::graph::{Bits, Graph};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in Bits(self.g.adjacency(v)) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.g.n() {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
            }
        }
        self.mate
    }
}

/// A maximum matching as a list of edges `(u, v)` with `u < v`.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mate = Blossom::new(g).run();
    mate.iter()
        .enumerate()
        .filter(|&(v, &m)| m != NONE && v < m)
        .map(|(v, &m)| (v, m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn brute(g: &Graph) -> usize {
        let edges = g.edges();
        let mut best = 0;
        for set in 0u32..(1 << edges.len()) {
            let mut used = 0u32;
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if set >> i & 1 == 1 {
                    if used & (1 << u | 1 << v) != 0 {
                        ok = false;
                        break;
                    }
                    used |= 1 << u | 1 << v;
                }
            }
            if ok {
                best = best.max(set.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn small() {
        assert_eq!(maximum_matching(&named::path(4)).len(), 2);
        assert_eq!(maximum_matching(&named::cycle(5)).len(), 2);
        assert_eq!(maximum_matching(&named::bowtie()).len(), 2);
        assert_eq!(maximum_matching(&named::complete(7)).len(), 3);
    }

    #[test]
    fn blossom_needed() {
        // Triangle 0-1-2 with tails 2-3 and 0-4-5: perfect matching requires
        // augmenting through the odd cycle.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 3);
        assert_eq!(brute(&g), 3);
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            if edges.len() > 16 {
                continue;
            }
            let g = Graph::new(n, &edges).unwrap();
            let m = maximum_matching(&g);
            let mut used = 0u32;
            for &(u, v) in &m {
                assert!(g.has_edge(u, v));
                assert_eq!(used & (1 << u | 1 << v), 0);
                used |= 1 << u | 1 << v;
            }
            assert_eq!(m.len(), brute(&g));
        }
    }
}
