//! Vertex-deletion recursion for the characteristic polynomial:
//! `Phi(G) = x Phi(G-v) - sum_{u~v} Phi(G-u-v) - 2 sum_{Z ∋ v} Phi(G-V(Z))`.

use std::collections::HashMap;

use crate::graph::{Bits, Graph};
use crate::poly::IntPolynomial;

/// Expands `Phi(g)` at vertex `v`; every sub-polynomial is again computed by
/// the same recursion, memoized on the remaining vertex set.
///
/// Panics if `v` is out of range.
pub fn schwenk_delete(g: &Graph, v: usize) -> IntPolynomial {
    assert!(v < g.n(), "vertex {v} out of range");
    let mut memo = HashMap::new();
    expand(g, g.vertex_mask(), v, &mut memo)
}

fn phi(g: &Graph, mask: u32, memo: &mut HashMap<u32, IntPolynomial>) -> IntPolynomial {
    if mask == 0 {
        return IntPolynomial::one();
    }
    if let Some(p) = memo.get(&mask) {
        return p.clone();
    }
    let start = mask.trailing_zeros() as usize;
    let comp = g.component_mask(start, mask);
    let p = if comp != mask {
        &expand(g, comp, start, memo) * &phi(g, mask & !comp, memo)
    } else {
        expand(g, mask, start, memo)
    };
    memo.insert(mask, p.clone());
    p
}

fn expand(g: &Graph, mask: u32, v: usize, memo: &mut HashMap<u32, IntPolynomial>) -> IntPolynomial {
    let rest = mask & !(1 << v);
    let mut acc = &IntPolynomial::x() * &phi(g, rest, memo);
    for u in Bits(g.adjacency(v) & rest) {
        acc = &acc - &phi(g, rest & !(1 << u), memo);
    }
    let two = IntPolynomial::constant(2);
    for cycle in cycles_through(g, mask, v) {
        acc = &acc - &(&two * &phi(g, mask & !cycle, memo));
    }
    acc
}

/// Vertex sets of the cycles through `v` inside `mask`, each cycle once.
fn cycles_through(g: &Graph, mask: u32, v: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let nbrs = g.adjacency(v) & mask;
    for first in Bits(nbrs) {
        // Walk v -> first -> ... -> last -> v with first < last.
        let mut stack = vec![(first, 1u32 << v | 1 << first)];
        while let Some((w, used)) = stack.pop() {
            for x in Bits(g.adjacency(w) & mask & !used) {
                let next = used | 1 << x;
                if nbrs & (1 << x) != 0 && x > first {
                    out.push(next);
                }
                stack.push((x, next));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::spectral::char_poly;

    #[test]
    fn small_cases() {
        let k2 = named::path(2);
        assert_eq!(schwenk_delete(&k2, 0), IntPolynomial::from_i64(&[-1, 0, 1]));
        let c3 = named::cycle(3);
        assert_eq!(schwenk_delete(&c3, 1), IntPolynomial::from_i64(&[-2, -3, 0, 1]));
    }

    #[test]
    fn agrees_with_char_poly() {
        for g in [named::bowtie(), named::complete(6), named::cycle(7), named::star(5)] {
            let p = char_poly(&g);
            for v in 0..g.n() {
                assert_eq!(schwenk_delete(&g, v), p);
            }
        }
    }

    #[test]
    fn counts_each_cycle_once() {
        // K4 has 7 cycles, 6 of them through any fixed vertex (3 triangles + 3 squares).
        let k4 = named::complete(4);
        assert_eq!(cycles_through(&k4, 0b1111, 0).len(), 6);
    }
}
