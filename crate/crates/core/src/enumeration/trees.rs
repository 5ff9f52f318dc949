//! Unlabeled rooted trees by size, as parent arrays (`parent[0]` unused,
//! `parent[i] < i` otherwise).

/// Key of a rooted tree: its size and its index among trees of that size.
pub(crate) type TreeKey = (u8, u16);

pub(crate) struct RootedTrees {
    by_size: Vec<Vec<Vec<u8>>>,
}

impl RootedTrees {
    /// All rooted trees with at most `max` vertices.
    pub(crate) fn up_to(max: usize) -> Self {
        let mut t = RootedTrees {
            by_size: vec![Vec::new(), vec![vec![0]]],
        };
        for s in 2..=max {
            let mut out = Vec::new();
            let mut children = Vec::new();
            t.multisets(s - 1, (u8::MAX, u16::MAX), &mut children, &mut out);
            t.by_size.push(out);
        }
        t
    }

    pub(crate) fn count(&self, size: usize) -> usize {
        self.by_size.get(size).map_or(0, Vec::len)
    }

    pub(crate) fn get(&self, key: TreeKey) -> &[u8] {
        &self.by_size[key.0 as usize][key.1 as usize]
    }

    /// Multisets of subtrees, keys non-increasing, with total size `rest`.
    fn multisets(&self, rest: usize, max: TreeKey, acc: &mut Vec<TreeKey>, out: &mut Vec<Vec<u8>>) {
        if rest == 0 {
            out.push(self.assemble(acc));
            return;
        }
        for size in (1..=rest.min(max.0 as usize)).rev() {
            let top = if size == max.0 as usize {
                max.1 as usize + 1
            } else {
                self.count(size)
            };
            for idx in (0..top.min(self.count(size))).rev() {
                acc.push((size as u8, idx as u16));
                self.multisets(rest - size, (size as u8, idx as u16), acc, out);
                acc.pop();
            }
        }
    }

    fn assemble(&self, children: &[TreeKey]) -> Vec<u8> {
        let mut parent = vec![0u8];
        for &key in children {
            let offset = parent.len() as u8;
            let sub = self.get(key);
            parent.push(0);
            parent.extend(sub[1..].iter().map(|&p| p + offset));
        }
        parent
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_rooted_tree_numbers() {
        // Number of rooted trees on s vertices, computed by the Euler
        // transform recurrence as an independent oracle.
        let max = 12;
        let mut a = vec![0u64; max + 1];
        a[1] = 1;
        for n in 1..max {
            let mut s = 0u64;
            for k in 1..=n {
                let d_sum: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * a[d]).sum();
                s += d_sum * a[n - k + 1];
            }
            a[n + 1] = s / n as u64;
        }
        let t = RootedTrees::up_to(max);
        for s in 1..=max {
            assert_eq!(t.count(s) as u64, a[s], "size {s}");
        }
    }

    #[test]
    fn parent_arrays_are_trees() {
        let t = RootedTrees::up_to(6);
        for s in 1..=6 {
            for i in 0..t.count(s) {
                let p = t.get((s as u8, i as u16));
                assert_eq!(p.len(), s);
                assert!(p.iter().enumerate().skip(1).all(|(j, &q)| (q as usize) < j));
            }
        }
    }
}
