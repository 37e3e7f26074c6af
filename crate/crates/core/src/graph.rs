//! Simple undirected graphs on dense vertex labels `0..n`, plus the
//! structural predicates used throughout the crate.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A finite simple undirected graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted and deduplicated, so
/// two graphs with the same vertex count and edge set compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an arbitrary list of vertex pairs. Duplicate pairs
    /// and reversed pairs collapse to a single edge.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_normalized(n, edges))
    }

    /// `edges` must already be sorted, deduplicated, in range and with `u < v`.
    pub(crate) fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_normalized(n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &pairs).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_normalized(n, edges)
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let edges = (1..=k).map(|i| (0, i)).collect();
        Self::from_normalized(k + 1, edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Degree sequence sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_regular(&self) -> bool {
        self.adj.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Applies `perm` (old label -> new label) and returns the relabeled graph.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let pairs: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.n, &pairs).expect("permutation preserves validity")
    }

    /// Induced subgraph on `keep` (ascending original labels), relabeled to
    /// `0..keep.len()` in that order. Returns the subgraph and the map from
    /// new labels to original ones.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.n];
        let mut original = Vec::new();
        for v in 0..self.n {
            if keep[v] {
                new_id[v] = original.len();
                original.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        (Graph::from_normalized(original.len(), edges), original)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    /// Connected with exactly `|V| + 2` edges.
    pub fn is_tricyclic(&self) -> bool {
        self.edges.len() == self.n + 2 && self.is_connected()
    }

    /// Vertices of degree one, ascending.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Deletes every pendant vertex in a single pass. Vertices that become
    /// pendant as a result are kept.
    pub fn strip_pendants_once(&self) -> Graph {
        self.strip_pendants_once_mapped().0
    }

    pub(crate) fn strip_pendants_once_mapped(&self) -> (Graph, Vec<usize>) {
        let keep: Vec<bool> = (0..self.n).map(|v| self.degree(v) != 1).collect();
        self.induced_subgraph(&keep)
    }

    /// The base: the unique minimal tricyclic subgraph, obtained by deleting
    /// pendant vertices until none remain.
    pub fn base(&self) -> Result<Graph> {
        Ok(self.base_mapped()?.0)
    }

    pub(crate) fn base_mapped(&self) -> Result<(Graph, Vec<usize>)> {
        if !self.is_tricyclic() {
            return Err(Error::NotTricyclic);
        }
        let mut degree = self.degrees();
        let mut alive = vec![true; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| degree[v] == 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] || degree[v] != 1 {
                continue;
            }
            alive[v] = false;
            for &u in &self.adj[v] {
                if alive[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        stack.push(u);
                    }
                }
            }
        }
        Ok(self.induced_subgraph(&alive))
    }
}

/// An internal path `v_0 v_1 ... v_s`: distinct vertices, both ends of degree
/// greater than two and every interior vertex of degree exactly two. When
/// `v_0 = v_s` it is an internal cycle (the end vertex is then listed twice).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalPath {
    pub vertices: Vec<usize>,
}

impl InternalPath {
    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_cycle(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }
}

/// All internal paths and cycles of `g`, each reported once. Degree-two
/// vertices on components without a branch vertex are not covered.
pub fn internal_paths(g: &Graph) -> Vec<InternalPath> {
    let mut used = std::collections::HashSet::new();
    let mut out = Vec::new();
    for start in 0..g.order() {
        if g.degree(start) <= 2 {
            continue;
        }
        for &first in g.neighbors(start) {
            let key = (start.min(first), start.max(first));
            if used.contains(&key) {
                continue;
            }
            let mut vertices = vec![start];
            let (mut prev, mut cur) = (start, first);
            used.insert(key);
            loop {
                vertices.push(cur);
                if g.degree(cur) != 2 {
                    break;
                }
                let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
                used.insert((cur.min(next), cur.max(next)));
                prev = cur;
                cur = next;
            }
            // A run ending in a pendant is not internal.
            if g.degree(*vertices.last().unwrap()) > 2 {
                out.push(InternalPath { vertices });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_examples() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3, Graph::path(3));
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.size(), 4);
        assert_eq!(c4, Graph::cycle(4));
        let all: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        assert_eq!(Graph::from_edge_list(4, &all).unwrap(), Graph::complete(4));
    }

    #[test]
    fn from_edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).is_connected());
        let two_triangles =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn tricyclicity() {
        assert!(Graph::complete(4).is_tricyclic());
        assert!(!Graph::cycle(5).is_tricyclic());
        // three triangles sharing a vertex
        let f3 = Graph::from_edge_list(
            7,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)],
        )
        .unwrap();
        assert!(f3.is_tricyclic());
    }

    #[test]
    fn pendants() {
        assert_eq!(Graph::star(3).pendant_vertices(), vec![1, 2, 3]);
        assert!(Graph::cycle(6).pendant_vertices().is_empty());
        assert_eq!(Graph::path(2).pendant_vertices(), vec![0, 1]);
    }

    #[test]
    fn strip_once_is_one_pass() {
        assert_eq!(Graph::star(3).strip_pendants_once(), Graph::empty(1));
        let c3_pendant = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(c3_pendant.strip_pendants_once(), Graph::cycle(3));
        assert_eq!(Graph::path(4).strip_pendants_once(), Graph::path(2));
    }

    #[test]
    fn base_iterates_to_fixpoint() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.base().unwrap(), k4);
        let mut pairs = k4.edges().to_vec();
        pairs.extend([(3, 4), (4, 5), (5, 6)]);
        let tailed = Graph::from_edge_list(7, &pairs).unwrap();
        assert_eq!(tailed.base().unwrap(), k4);
        assert_eq!(Graph::cycle(5).base(), Err(Error::NotTricyclic));
    }

    #[test]
    fn internal_paths_of_theta() {
        // K_4 minus an edge: two branch vertices joined by three paths
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let mut lengths: Vec<_> = internal_paths(&g).iter().map(InternalPath::length).collect();
        lengths.sort();
        assert_eq!(lengths, vec![1, 2, 2]);
    }

    #[test]
    fn internal_cycle_detected() {
        // triangle hanging off a degree-3 vertex of K_4
        let mut pairs = Graph::complete(4).edges().to_vec();
        pairs.extend([(0, 4), (0, 5), (4, 5)]);
        let g = Graph::from_edge_list(6, &pairs).unwrap();
        let cycles: Vec<_> = internal_paths(&g).into_iter().filter(|p| p.is_cycle()).collect();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].length(), 3);
    }
}
