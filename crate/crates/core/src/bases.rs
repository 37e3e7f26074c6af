//! The eight topologies of tricyclic bases.
//!
//! Suppressing the degree-two vertices of a base leaves a connected
//! multigraph with cyclomatic number three and minimum degree three (a loop
//! counts twice). There are fifteen such multigraphs; they fall into eight
//! classes:
//!
//! | type | shape |
//! |------|-------|
//! | 1 | three cycles joined at one point, directly or through paths |
//! | 2 | a cycle carrying two further cycles at two distinct points |
//! | 3 | a theta graph with a cycle hanging at one of its branch vertices |
//! | 4 | a theta graph with a cycle hanging at an interior vertex of a route |
//! | 5 | branch vertices `P, Q, R` with routes `PQ`, `PR` twice, `RQ` twice |
//! | 6 | four internally disjoint routes between two vertices |
//! | 7 | two digons `AB`, `CD` joined by routes `AC` and `BD` |
//! | 8 | a subdivision of `K_4` |

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{internal_paths, Graph};

/// One of the eight base topologies `1..=8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BaseType(u8);

impl BaseType {
    pub const ALL: [BaseType; 8] = [
        BaseType(1),
        BaseType(2),
        BaseType(3),
        BaseType(4),
        BaseType(5),
        BaseType(6),
        BaseType(7),
        BaseType(8),
    ];

    pub fn new(tag: u8) -> Result<Self> {
        if (1..=8).contains(&tag) {
            Ok(BaseType(tag))
        } else {
            Err(Error::IndexOutOfRange(tag as usize))
        }
    }

    pub fn tag(self) -> u8 {
        self.0
    }
}

impl fmt::Display for BaseType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}

/// A route between branch vertices (or a loop when both ends agree) together
/// with its length in the underlying graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub ends: (usize, usize),
    pub length: usize,
}

impl Arc {
    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }
}

/// A base with its degree-two vertices suppressed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedMultigraph {
    /// Vertices of the base with degree at least three, as labels of the base.
    pub branch: Vec<usize>,
    /// Arc ends index into `branch`.
    pub arcs: Vec<Arc>,
}

impl ReducedMultigraph {
    /// Reduces a graph of minimum degree two that has at least one vertex of
    /// degree three or more.
    pub fn from_base(base: &Graph) -> Result<Self> {
        let branch: Vec<usize> = (0..base.order()).filter(|&v| base.degree(v) >= 3).collect();
        if branch.is_empty() || (0..base.order()).any(|v| base.degree(v) < 2) {
            return Err(Error::UnknownBaseType);
        }
        let index = |v: usize| branch.binary_search(&v).expect("ends are branch vertices");
        let arcs = internal_paths(base)
            .iter()
            .map(|p| Arc { ends: (index(p.start()), index(p.end())), length: p.length() })
            .collect();
        Ok(ReducedMultigraph { branch, arcs })
    }

    pub fn total_length(&self) -> usize {
        self.arcs.iter().map(|a| a.length).sum()
    }

    pub fn cyclomatic_number(&self) -> usize {
        self.arcs.len() + 1 - self.branch.len()
    }

    /// Isomorphism-invariant key of the multigraph shape, ignoring lengths.
    pub fn shape(&self) -> Shape {
        Shape::of(self.branch.len(), self.arcs.iter().map(|a| a.ends))
    }
}

/// Canonical key of a multigraph on at most four vertices: the minimum over
/// vertex permutations of the sorted end pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    vertices: usize,
    pairs: Vec<(usize, usize)>,
}

impl Shape {
    fn of(vertices: usize, arcs: impl Iterator<Item = (usize, usize)> + Clone) -> Self {
        let mut best: Option<Vec<(usize, usize)>> = None;
        for perm in permutations(vertices) {
            let mut pairs: Vec<_> = arcs
                .clone()
                .map(|(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
                .collect();
            pairs.sort_unstable();
            if best.as_ref().map_or(true, |b| pairs < *b) {
                best = Some(pairs);
            }
        }
        Shape { vertices, pairs: best.unwrap_or_default() }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// The fifteen reduced multigraphs as (vertex count, arc end pairs, type).
pub const REDUCED_CATALOG: [(usize, &[(usize, usize)], u8); 15] = [
    (1, &[(0, 0), (0, 0), (0, 0)], 1),
    (2, &[(0, 0), (0, 1), (1, 1), (1, 1)], 1),
    (3, &[(0, 0), (1, 1), (2, 2), (0, 2), (1, 2)], 1),
    (4, &[(0, 0), (1, 1), (2, 2), (0, 3), (1, 3), (2, 3)], 1),
    (2, &[(0, 0), (0, 1), (0, 1), (1, 1)], 2),
    (3, &[(0, 0), (0, 1), (0, 1), (1, 2), (2, 2)], 2),
    (4, &[(0, 0), (0, 1), (1, 2), (1, 2), (2, 3), (3, 3)], 2),
    (2, &[(0, 1), (0, 1), (0, 1), (1, 1)], 3),
    (3, &[(0, 1), (0, 1), (0, 1), (1, 2), (2, 2)], 3),
    (3, &[(0, 1), (0, 1), (0, 2), (1, 2), (2, 2)], 4),
    (4, &[(0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 3)], 4),
    (3, &[(0, 1), (0, 2), (0, 2), (1, 2), (1, 2)], 5),
    (2, &[(0, 1), (0, 1), (0, 1), (0, 1)], 6),
    (4, &[(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)], 7),
    (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 8),
];

fn catalog_shapes() -> &'static [(Shape, BaseType)] {
    static SHAPES: std::sync::OnceLock<Vec<(Shape, BaseType)>> = std::sync::OnceLock::new();
    SHAPES.get_or_init(|| {
        REDUCED_CATALOG
            .iter()
            .map(|&(k, pairs, tag)| (Shape::of(k, pairs.iter().copied()), BaseType(tag)))
            .collect()
    })
}

/// Type of a reduced multigraph, if it is one of the fifteen.
pub fn classify_reduced(r: &ReducedMultigraph) -> Result<BaseType> {
    let shape = r.shape();
    catalog_shapes()
        .iter()
        .find(|(s, _)| *s == shape)
        .map(|&(_, t)| t)
        .ok_or(Error::UnknownBaseType)
}

/// Base topology of a tricyclic graph.
pub fn base_type(g: &Graph) -> Result<BaseType> {
    let base = g.base()?;
    classify_reduced(&ReducedMultigraph::from_base(&base)?)
}

/// Builds the graph obtained by replacing each arc of a multigraph with a
/// path of the given length. Loops need length at least three and parallel
/// arcs may include at most one of length one. Returns `None` when the result
/// would not be simple.
pub fn subdivide(vertices: usize, arcs: &[Arc]) -> Option<Graph> {
    let mut n = vertices;
    let mut pairs = Vec::new();
    for arc in arcs {
        let (a, b) = arc.ends;
        if arc.length == 0 || (arc.is_loop() && arc.length < 3) {
            return None;
        }
        let mut prev = a;
        for _ in 1..arc.length {
            pairs.push((prev, n));
            prev = n;
            n += 1;
        }
        pairs.push((prev, b));
    }
    let g = Graph::from_edge_list(n, &pairs).ok()?;
    (g.size() == pairs.len()).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete_and_distinct() {
        let shapes = catalog_shapes();
        for (i, (a, _)) in shapes.iter().enumerate() {
            for (b, _) in &shapes[i + 1..] {
                assert_ne!(a, b);
            }
        }
        for &(k, pairs, _) in &REDUCED_CATALOG {
            let mut deg = vec![0; k];
            for &(a, b) in pairs {
                deg[a] += 1;
                deg[b] += 1;
            }
            assert!(deg.iter().all(|&d| d >= 3));
            assert_eq!(pairs.len() + 1 - k, 3);
        }
    }

    #[test]
    fn k4_is_type_8() {
        assert_eq!(base_type(&Graph::complete(4)).unwrap(), BaseType(8));
    }

    #[test]
    fn reduction_preserves_edges_and_cyclomatic_number() {
        let arcs = [
            Arc { ends: (0, 1), length: 3 },
            Arc { ends: (0, 1), length: 1 },
            Arc { ends: (0, 1), length: 2 },
            Arc { ends: (1, 1), length: 4 },
        ];
        let g = subdivide(2, &arcs).unwrap();
        let r = ReducedMultigraph::from_base(&g).unwrap();
        assert_eq!(r.total_length(), g.size());
        assert_eq!(r.cyclomatic_number(), 3);
        assert_eq!(classify_reduced(&r).unwrap(), BaseType(3));
    }

    #[test]
    fn subdivide_rejects_multi_edges() {
        let arcs = [Arc { ends: (0, 1), length: 1 }, Arc { ends: (0, 1), length: 1 }];
        assert!(subdivide(2, &arcs).is_none());
        assert!(subdivide(1, &[Arc { ends: (0, 0), length: 2 }]).is_none());
    }

    #[test]
    fn not_tricyclic_rejected() {
        assert_eq!(base_type(&Graph::cycle(4)), Err(Error::NotTricyclic));
    }
}
