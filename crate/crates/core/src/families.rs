//! Named bicyclic families, base extraction and the B1/B2 split.
//!
//! Vertex roles, fixed for every constructor:
//! * `infinity_graph(p, l, q)`: `0..p` is the first cycle with `0` the
//!   junction; the joining path continues from `0` and ends at `w`, which
//!   also lies on the second cycle. For `l = 1`, `w = 0`.
//! * `theta_graph(l, p, q)`: `0` and `1` are the branch vertices, followed
//!   by the internal vertices of the `l`, `p` and `q` paths in order.
//! * For `K4 - e = theta(0,1,1)`, `0-1` is the shared edge and `2`, `3` are
//!   the degree-2 vertices.
//!
//! Attached pieces are appended after the base vertices.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Bits, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{spec} is infeasible: requires {constraint}")]
    Infeasible { spec: String, constraint: String },
    #[error("unrecognised family specification {0:?}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parametric description of a named family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    InfinityGraph { p: usize, l: usize, q: usize },
    ThetaGraph { l: usize, p: usize, q: usize },
    F { n: usize },
    Fprime { n: usize },
    M { n: usize, alpha: usize },
    M1 { n: usize, alpha: usize },
    M1prime { n: usize, alpha: usize },
    M2 { n: usize, alpha: usize },
    M3 { n: usize, alpha: usize },
    M3prime { n: usize, alpha: usize },
    M4 { n: usize, alpha: usize },
    M5 { n: usize, alpha: usize },
    M6 { n: usize, alpha: usize },
    Bsharp { n: usize, k: usize },
}

/// Residual graph type after pendant stripping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseKind {
    /// `B(p, l, q)` with `p <= q`.
    B1 { p: usize, l: usize, q: usize },
    /// `P(l, p, q)` with `l <= p <= q`.
    B2 { l: usize, p: usize, q: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseClass {
    B1,
    B2,
}

impl BaseKind {
    pub fn class(&self) -> BaseClass {
        match self {
            BaseKind::B1 { .. } => BaseClass::B1,
            BaseKind::B2 { .. } => BaseClass::B2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            BaseKind::B1 { p, l, q } => p + l + q - 2,
            BaseKind::B2 { l, p, q } => l + p + q + 2,
        }
    }

    pub fn build(&self) -> Graph {
        match *self {
            BaseKind::B1 { p, l, q } => infinity_graph(p, l, q),
            BaseKind::B2 { l, p, q } => theta_graph(l, p, q),
        }
        .expect("BaseKind parameters are feasible")
    }
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseKind::B1 { p, l, q } => write!(f, "B({p},{l},{q})"),
            BaseKind::B2 { l, p, q } => write!(f, "P({l},{p},{q})"),
        }
    }
}

impl fmt::Display for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseClass::B1 => "B1",
            BaseClass::B2 => "B2",
        })
    }
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        Builder { n, edges }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn path(&mut self, at: usize, len: usize) {
        let mut prev = at;
        for _ in 0..len {
            let v = self.vertex();
            self.edges.push((prev, v));
            prev = v;
        }
    }

    fn pendants(&mut self, at: usize, count: usize) -> &mut Self {
        (0..count).for_each(|_| self.path(at, 1));
        self
    }

    fn two_paths(&mut self, at: usize, count: usize) -> &mut Self {
        (0..count).for_each(|_| self.path(at, 2));
        self
    }

    fn finish(&self) -> Result<Graph, GraphError> {
        Graph::new(self.n, &self.edges)
    }
}

fn infeasible(spec: &dyn fmt::Display, constraint: &str) -> FamilyError {
    FamilyError::Infeasible {
        spec: spec.to_string(),
        constraint: constraint.to_string(),
    }
}

fn infinity_builder(p: usize, l: usize, q: usize) -> Builder {
    let mut b = Builder::new(p, (0..p).map(|i| (i, (i + 1) % p)).collect());
    let mut w = 0;
    for _ in 1..l {
        let v = b.vertex();
        b.edges.push((w, v));
        w = v;
    }
    let first = b.n;
    for _ in 1..q {
        b.vertex();
    }
    let ring: Vec<usize> = std::iter::once(w).chain(first..b.n).collect();
    for i in 0..q {
        b.edges.push((ring[i], ring[(i + 1) % q]));
    }
    b
}

fn theta_builder(l: usize, p: usize, q: usize) -> Builder {
    let mut b = Builder::new(2, Vec::new());
    for len in [l, p, q] {
        let mut prev = 0;
        for _ in 0..len {
            let v = b.vertex();
            b.edges.push((prev, v));
            prev = v;
        }
        b.edges.push((prev, 1));
    }
    b
}

/// Two cycles `C_p`, `C_q` joined by a path on `l` vertices.
pub fn infinity_graph(p: usize, l: usize, q: usize) -> Result<Graph, FamilyError> {
    let spec = FamilySpec::InfinityGraph { p, l, q };
    if p < 3 || q < 3 {
        return Err(infeasible(&spec, "p >= 3 and q >= 3"));
    }
    if l < 1 {
        return Err(infeasible(&spec, "l >= 1"));
    }
    if p + l + q - 2 > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(p + l + q - 2).into());
    }
    Ok(infinity_builder(p, l, q).finish()?)
}

/// Two vertices joined by three internally disjoint paths with `l`, `p`, `q`
/// internal vertices.
pub fn theta_graph(l: usize, p: usize, q: usize) -> Result<Graph, FamilyError> {
    let spec = FamilySpec::ThetaGraph { l, p, q };
    if !(l <= p && p <= q) {
        return Err(infeasible(&spec, "l <= p <= q"));
    }
    if p == 0 {
        return Err(infeasible(&spec, "at most one of l, p, q equal to 0"));
    }
    if l + p + q + 2 > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(l + p + q + 2).into());
    }
    Ok(theta_builder(l, p, q).finish()?)
}

impl FamilySpec {
    /// Vertex count of the constructed graph.
    pub fn n(&self) -> usize {
        use FamilySpec::*;
        match *self {
            InfinityGraph { p, l, q } => p + l + q - 2,
            ThetaGraph { l, p, q } => l + p + q + 2,
            F { n } | Fprime { n } | Bsharp { n, .. } => n,
            M { n, .. } | M1 { n, .. } | M1prime { n, .. } | M2 { n, .. } | M3 { n, .. } => n,
            M3prime { n, .. } | M4 { n, .. } | M5 { n, .. } | M6 { n, .. } => n,
        }
    }

    /// Independence number parameter, for the `M`-type families.
    pub fn alpha(&self) -> Option<usize> {
        use FamilySpec::*;
        match *self {
            M { alpha, .. } | M1 { alpha, .. } | M1prime { alpha, .. } | M2 { alpha, .. } => {
                Some(alpha)
            }
            M3 { alpha, .. } | M3prime { alpha, .. } | M4 { alpha, .. } => Some(alpha),
            M5 { alpha, .. } | M6 { alpha, .. } => Some(alpha),
            F { n } | Fprime { n } => Some(n.saturating_sub(2) / 2),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            InfinityGraph { .. } => "B",
            ThetaGraph { .. } => "P",
            F { .. } => "F",
            Fprime { .. } => "F'",
            M { .. } => "M",
            M1 { .. } => "M1",
            M1prime { .. } => "M1'",
            M2 { .. } => "M2",
            M3 { .. } => "M3",
            M3prime { .. } => "M3'",
            M4 { .. } => "M4",
            M5 { .. } => "M5",
            M6 { .. } => "M6",
            Bsharp { .. } => "Bsharp",
        }
    }

    /// Builds the spec from a family name and `(n, alpha)` (or `(n, k)` for
    /// `Bsharp`); `F` and `F'` ignore the second parameter.
    pub fn from_name(name: &str, n: usize, param: usize) -> Result<Self, FamilyError> {
        use FamilySpec::*;
        let alpha = param;
        Ok(match name {
            "F" => F { n },
            "F'" | "Fprime" => Fprime { n },
            "M" => M { n, alpha },
            "M1" => M1 { n, alpha },
            "M1'" | "M1prime" => M1prime { n, alpha },
            "M2" => M2 { n, alpha },
            "M3" => M3 { n, alpha },
            "M3'" | "M3prime" => M3prime { n, alpha },
            "M4" => M4 { n, alpha },
            "M5" => M5 { n, alpha },
            "M6" => M6 { n, alpha },
            "Bsharp" | "B#" => Bsharp { n, k: param },
            _ => return Err(FamilyError::Parse(name.to_string())),
        })
    }

    /// Checks the per-kind feasibility constraints.
    pub fn check(&self) -> Result<(), FamilyError> {
        use FamilySpec::*;
        let fail = |c: &str| Err(infeasible(self, c));
        // Signed helpers: a - b with a, b small.
        let d = |a: usize, b: usize| a as i64 - b as i64;
        let n = self.n();
        if n > crate::graph::MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n).into());
        }
        match *self {
            InfinityGraph { p, l, q } => infinity_graph(p, l, q).map(|_| ()),
            ThetaGraph { l, p, q } => theta_graph(l, p, q).map(|_| ()),
            F { n } | Fprime { n } => {
                if n % 2 != 0 || n < 8 {
                    fail("n even and n >= 8")
                } else {
                    Ok(())
                }
            }
            Bsharp { n, k } => {
                if k < 1 || n < 5 + k {
                    fail("1 <= k <= n-5")
                } else {
                    Ok(())
                }
            }
            M { n, alpha } | M3 { n, alpha } | M3prime { n, alpha } => {
                if d(2 * alpha + 1, n) < 0 {
                    fail("2*alpha - n + 1 >= 0")
                } else if d(n, alpha + 3) < 0 {
                    fail("n - alpha - 3 >= 0")
                } else {
                    Ok(())
                }
            }
            M1 { n, alpha } | M2 { n, alpha } => {
                if d(2 * alpha + 1, n) < 0 {
                    fail("2*alpha - n + 1 >= 0")
                } else if d(n, alpha + 4) < 0 {
                    fail("n - alpha - 4 >= 0")
                } else {
                    Ok(())
                }
            }
            M1prime { n, alpha } => {
                if d(2 * alpha + 1, n) < 0 {
                    fail("2*alpha - n + 1 >= 0")
                } else if d(n, alpha + 5) < 0 {
                    fail("n - alpha - 5 >= 0")
                } else {
                    Ok(())
                }
            }
            M4 { n, alpha } => {
                if d(2 * alpha + 2, n) < 0 {
                    fail("2*alpha - n + 2 >= 0")
                } else if d(n, alpha + 4) < 0 {
                    fail("n - alpha - 4 >= 0")
                } else {
                    Ok(())
                }
            }
            M5 { n, alpha } => {
                if d(2 * alpha + 2, n) < 0 {
                    fail("2*alpha - n + 2 >= 0")
                } else if d(n, alpha + 5) < 0 {
                    fail("n - alpha - 5 >= 0")
                } else {
                    Ok(())
                }
            }
            M6 { n, alpha } => {
                if d(2 * alpha + 2, n) < 0 {
                    fail("2*alpha - n + 2 >= 0")
                } else if d(n, alpha + 3) < 0 {
                    fail("n - alpha - 3 >= 0")
                } else {
                    Ok(())
                }
            }
        }
    }

    /// The base the construction is built on.
    pub fn expected_base(&self) -> BaseKind {
        use FamilySpec::*;
        let bowtie = BaseKind::B1 { p: 3, l: 1, q: 3 };
        let dumbbell = BaseKind::B1 { p: 3, l: 2, q: 3 };
        let k4e = BaseKind::B2 { l: 0, p: 1, q: 1 };
        match *self {
            InfinityGraph { p, l, q } => BaseKind::B1 {
                p: p.min(q),
                l,
                q: p.max(q),
            },
            ThetaGraph { l, p, q } => BaseKind::B2 { l, p, q },
            F { .. } | M5 { .. } => dumbbell,
            Fprime { .. } => BaseKind::B1 { p: 3, l: 3, q: 3 },
            M { .. } | M1prime { .. } | M2 { .. } | M4 { .. } | Bsharp { .. } => bowtie,
            M1 { .. } | M3 { .. } | M3prime { .. } | M6 { .. } => k4e,
        }
    }

    /// Every feasible named family member (not `B`/`P`) on `n` vertices.
    pub fn feasible_on(n: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for name in ["F", "F'"] {
            out.push(Self::from_name(name, n, 0).unwrap());
        }
        for name in ["M", "M1", "M1'", "M2", "M3", "M3'", "M4", "M5", "M6"] {
            for alpha in 0..=n {
                out.push(Self::from_name(name, n, alpha).unwrap());
            }
        }
        for k in 1..=n {
            out.push(FamilySpec::Bsharp { n, k });
        }
        out.retain(|s| s.check().is_ok());
        out
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match *self {
            InfinityGraph { p, l, q } => write!(f, "B({p},{l},{q})"),
            ThetaGraph { l, p, q } => write!(f, "P({l},{p},{q})"),
            F { n } | Fprime { n } => write!(f, "{}({n})", self.name()),
            Bsharp { n, k } => write!(f, "Bsharp({n},{k})"),
            _ => write!(f, "{}({},{})", self.name(), self.n(), self.alpha().unwrap()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses the `Display` form, e.g. `M(12,6)`, `F'(10)`, `P(0,1,1)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Parse(s.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let args: Vec<usize> = inner
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let name = &s[..open];
        match (name, args.as_slice()) {
            ("B", &[p, l, q]) => Ok(FamilySpec::InfinityGraph { p, l, q }),
            ("P", &[l, p, q]) => Ok(FamilySpec::ThetaGraph { l, p, q }),
            ("F" | "F'" | "Fprime", &[n]) => Self::from_name(name, n, 0),
            (_, &[n, a]) if !matches!(name, "F" | "F'" | "Fprime" | "B" | "P") => {
                Self::from_name(name, n, a)
            }
            _ => Err(bad()),
        }
    }
}

/// Builds the graph described by `spec`.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    use FamilySpec::*;
    spec.check()?;
    let n = spec.n();
    let a = spec.alpha().unwrap_or(0);
    // Counts below are non-negative once `check` passed.
    let c = |x: i64| x as usize;
    let (n_, a_) = (n as i64, a as i64);
    let g = match *spec {
        InfinityGraph { p, l, q } => infinity_graph(p, l, q)?,
        ThetaGraph { l, p, q } => theta_graph(l, p, q)?,
        F { n } => infinity_builder(3, 2, 3).two_paths(0, (n - 6) / 2).finish()?,
        Fprime { n } => infinity_builder(3, 3, 3)
            .pendants(3, 1)
            .two_paths(3, (n - 8) / 2)
            .finish()?,
        M { .. } => infinity_builder(3, 1, 3)
            .pendants(0, c(2 * a_ - n_ + 1))
            .two_paths(0, c(n_ - a_ - 3))
            .finish()?,
        M1 { .. } => theta_builder(0, 1, 1)
            .pendants(0, c(2 * a_ - n_ + 1))
            .two_paths(0, c(n_ - a_ - 4))
            .pendants(1, 1)
            .pendants(2, 1)
            .pendants(3, 1)
            .finish()?,
        M1prime { .. } => infinity_builder(3, 1, 3)
            .pendants(0, c(2 * a_ - n_ + 1))
            .two_paths(0, c(n_ - a_ - 5))
            .pendants(1, 1)
            .pendants(2, 1)
            .pendants(3, 1)
            .pendants(4, 1)
            .finish()?,
        M2 { .. } => infinity_builder(3, 1, 3)
            .pendants(0, c(2 * a_ - n_ + 1))
            .two_paths(0, c(n_ - a_ - 4))
            .pendants(3, 1)
            .pendants(4, 1)
            .finish()?,
        M3 { .. } => theta_builder(0, 1, 1)
            .pendants(0, c(2 * a_ - n_ + 1))
            .two_paths(0, c(n_ - a_ - 3))
            .pendants(2, 1)
            .finish()?,
        M3prime { .. } => theta_builder(0, 1, 1)
            .pendants(2, c(2 * a_ - n_ + 1))
            .two_paths(2, c(n_ - a_ - 3))
            .pendants(0, 1)
            .finish()?,
        M4 { .. } => infinity_builder(3, 1, 3)
            .pendants(1, c(2 * a_ - n_ + 2))
            .two_paths(1, c(n_ - a_ - 4))
            .pendants(2, 1)
            .finish()?,
        M5 { .. } => infinity_builder(3, 2, 3)
            .pendants(0, c(2 * a_ - n_ + 2))
            .two_paths(0, c(n_ - a_ - 5))
            .pendants(1, 1)
            .pendants(2, 1)
            .finish()?,
        M6 { .. } => theta_builder(0, 1, 1)
            .pendants(2, c(2 * a_ - n_ + 2))
            .two_paths(2, c(n_ - a_ - 3))
            .finish()?,
        Bsharp { n, k } => {
            let mut b = infinity_builder(3, 1, 3);
            let total = n - 5;
            for i in 0..k {
                b.path(0, total / k + usize::from(i < total % k));
            }
            b.finish()?
        }
    };
    debug_assert_eq!(g.n(), n);
    Ok(g)
}

/// Vertices left after repeatedly deleting pendant vertices.
pub fn base_mask(g: &Graph) -> Result<u32, GraphError> {
    g.require_bicyclic()?;
    let mut mask = g.vertex_mask();
    loop {
        let leaves = Bits(mask)
            .filter(|&v| (g.adjacency(v) & mask).count_ones() <= 1)
            .fold(0u32, |acc, v| acc | 1 << v);
        if leaves == 0 {
            return Ok(mask);
        }
        mask &= !leaves;
    }
}

/// The minimal bicyclic subgraph and its type. Base vertices keep their
/// relative order.
pub fn base(g: &Graph) -> Result<(Graph, BaseKind), GraphError> {
    let mask = base_mask(g)?;
    let h = g.induced(mask).expect("base of a bicyclic graph is nonempty");
    let kind = base_kind(&h);
    Ok((h, kind))
}

pub fn classify(g: &Graph) -> Result<BaseClass, GraphError> {
    base(g).map(|(_, k)| k.class())
}

/// Follows degree-2 vertices from `start` (entered from `from`); returns the
/// branch vertex reached and the number of internal vertices passed.
fn trace(h: &Graph, from: usize, start: usize) -> (usize, usize) {
    let (mut prev, mut cur, mut internal) = (from, start, 0);
    while h.adjacency(cur).count_ones() == 2 {
        let next = (h.adjacency(cur) & !(1 << prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
        internal += 1;
    }
    (cur, internal)
}

fn base_kind(h: &Graph) -> BaseKind {
    let branch: Vec<usize> = (0..h.n()).filter(|&v| h.adjacency(v).count_ones() > 2).collect();
    if let [w] = branch[..] {
        // Degree-4 vertex: two cycles through w, l = 1.
        let mut loops: Vec<usize> = Bits(h.adjacency(w)).map(|u| trace(h, w, u).1).collect();
        loops.sort_unstable();
        // Each cycle is seen twice, once from each side.
        return BaseKind::B1 {
            p: loops[0] + 1,
            l: 1,
            q: loops[2] + 1,
        };
    }
    let (u, v) = (branch[0], branch[1]);
    let walks: Vec<(usize, usize)> = Bits(h.adjacency(u)).map(|x| trace(h, u, x)).collect();
    if walks.iter().all(|&(end, _)| end == v) {
        let mut len: Vec<usize> = walks.iter().map(|&(_, k)| k).collect();
        len.sort_unstable();
        return BaseKind::B2 {
            l: len[0],
            p: len[1],
            q: len[2],
        };
    }
    let cyc_u = walks.iter().find(|&&(end, _)| end == u).unwrap().1 + 1;
    let joint = walks.iter().find(|&&(end, _)| end == v).unwrap().1 + 2;
    let x = Bits(h.adjacency(v)).find(|&x| trace(h, v, x).0 == v).unwrap();
    let cyc_v = trace(h, v, x).1 + 1;
    BaseKind::B1 {
        p: cyc_u.min(cyc_v),
        l: joint,
        q: cyc_u.max(cyc_v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_counts() {
        for (p, l, q) in [(3, 1, 3), (3, 2, 3), (5, 3, 3), (4, 1, 6)] {
            let g = infinity_graph(p, l, q).unwrap();
            assert_eq!(g.n(), p + l + q - 2);
            assert!(g.is_bicyclic());
            assert_eq!(base(&g).unwrap().1, BaseKind::B1 { p: p.min(q), l, q: p.max(q) });
        }
        assert_eq!(infinity_graph(3, 1, 3).unwrap().degree(0).unwrap(), 4);
        assert!(infinity_graph(2, 1, 3).is_err());
        assert!(infinity_graph(3, 0, 3).is_err());
    }

    #[test]
    fn theta_counts() {
        for (l, p, q) in [(0, 1, 1), (1, 1, 1), (0, 1, 2), (2, 3, 5)] {
            let g = theta_graph(l, p, q).unwrap();
            assert_eq!((g.n(), g.m()), (l + p + q + 2, l + p + q + 3));
            assert_eq!(base(&g).unwrap().1, BaseKind::B2 { l, p, q });
        }
        assert!(theta_graph(0, 0, 1).is_err());
        assert!(theta_graph(2, 1, 1).is_err());
    }

    #[test]
    fn family_sizes_and_bases() {
        for n in 6..=16 {
            for spec in FamilySpec::feasible_on(n) {
                let g = build_family(&spec).unwrap();
                assert_eq!(g.n(), n, "{spec}");
                assert!(g.is_bicyclic(), "{spec}");
                assert_eq!(base(&g).unwrap().1, spec.expected_base(), "{spec}");
            }
        }
    }

    #[test]
    fn bsharp_lengths() {
        let g = build_family(&FamilySpec::Bsharp { n: 12, k: 3 }).unwrap();
        // 7 = 3 + 2 + 2
        assert_eq!(g.degree(0).unwrap(), 7);
        assert_eq!(g.degrees().iter().filter(|&&d| d == 1).count(), 3);
        let g = build_family(&FamilySpec::Bsharp { n: 10, k: 5 }).unwrap();
        assert_eq!(g.degree(0).unwrap(), 9);
    }

    #[test]
    fn infeasible_names_constraint() {
        let err = build_family(&FamilySpec::M { n: 10, alpha: 8 }).unwrap_err();
        assert!(err.to_string().contains("n - alpha - 3"));
        assert!(build_family(&FamilySpec::F { n: 9 }).is_err());
        assert!(build_family(&FamilySpec::Bsharp { n: 10, k: 6 }).is_err());
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["M(12,6)", "F'(10)", "F(10)", "P(0,1,1)", "B(3,2,3)", "M3'(11,6)", "Bsharp(10,5)"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("Q(1,2)".parse::<FamilySpec>().is_err());
        assert!("M(12)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn classification() {
        let f = build_family(&FamilySpec::F { n: 10 }).unwrap();
        assert_eq!(classify(&f).unwrap(), BaseClass::B1);
        let m3 = build_family(&FamilySpec::M3 { n: 11, alpha: 6 }).unwrap();
        assert_eq!(classify(&m3).unwrap(), BaseClass::B2);
        assert!(classify(&crate::graph::named::cycle(5)).is_err());
    }
}
