//! Canonical forms and isomorphism testing.
//!
//! The search individualizes vertices of the first non-singleton cell of an
//! equitable partition, refines, and recurses until the partition is
//! discrete. Each leaf gives a labeling; the canonical form is the minimal
//! graph6 encoding over all leaves. Leaves that reproduce an earlier code
//! yield automorphisms, which prune the tree in two ways: a backjump to the
//! level where the two leaf paths diverge, and orbit pruning of sibling
//! candidates under the automorphisms that fix the current path pointwise.

use std::cmp::Ordering;

use crate::graph::Graph;
use crate::io::to_graph6_bytes;

/// Canonical form of a graph: the graph6 bytes of its canonical relabeling.
/// Two graphs have equal canonical forms iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical graph as a graph6 string.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

/// Ordered partition of the vertex set. `cell[v]` is the index of the cell
/// containing `v`; indices are `0..num_cells` with no gaps.
#[derive(Clone)]
struct Partition {
    cell: Vec<usize>,
    num_cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition { cell: vec![0; n], num_cells: usize::from(n > 0) }
    }

    fn is_discrete(&self) -> bool {
        self.num_cells == self.cell.len()
    }

    /// Smallest-index cell with more than one member, in ascending vertex order.
    fn target_cell(&self) -> Option<Vec<usize>> {
        let mut counts = vec![0usize; self.num_cells];
        for &c in &self.cell {
            counts[c] += 1;
        }
        let c = counts.iter().position(|&k| k > 1)?;
        Some((0..self.cell.len()).filter(|&v| self.cell[v] == c).collect())
    }

    /// Splits `v` off into its own cell placed just before the rest of its cell.
    fn individualize(&self, v: usize) -> Self {
        let c = self.cell[v];
        let cell = self
            .cell
            .iter()
            .enumerate()
            .map(|(u, &k)| match k.cmp(&c) {
                Ordering::Less => k,
                Ordering::Equal if u == v => k,
                _ => k + 1,
            })
            .collect();
        Partition { cell, num_cells: self.num_cells + 1 }
    }

    /// Colour refinement to the coarsest equitable refinement. New cells are
    /// ordered by (old cell, sorted neighbour cells), which does not depend on
    /// vertex labels.
    fn refine(&mut self, g: &Graph) {
        let n = self.cell.len();
        loop {
            let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| self.cell[u]).collect();
                    nb.sort_unstable();
                    (self.cell[v], nb, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = vec![0; n];
            let mut k = 0;
            for i in 0..n {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    k += 1;
                }
                next[sigs[i].2] = k;
            }
            let count = if n == 0 { 0 } else { k + 1 };
            let stable = count == self.num_cells;
            self.cell = next;
            self.num_cells = count;
            if stable {
                return;
            }
        }
    }
}

struct Leaf {
    code: Vec<u8>,
    /// `inverse[new] = old`
    inverse: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn leaf_code(&self, labeling: &[usize]) -> Vec<u8> {
        to_graph6_bytes(&self.g.relabel(labeling))
    }

    fn common_prefix(a: &[usize], b: &[usize]) -> usize {
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    /// Returns `Some(level)` to abandon everything below the node at `level`.
    fn visit_leaf(&mut self, p: &Partition, path: &[usize]) -> Option<usize> {
        let labeling = p.cell.clone();
        let mut inverse = vec![0; labeling.len()];
        for (v, &l) in labeling.iter().enumerate() {
            inverse[l] = v;
        }
        let code = self.leaf_code(&labeling);
        let leaf = Leaf { code, inverse, path: path.to_vec() };

        let Some(first) = &self.first else {
            self.best = Some(Leaf { code: leaf.code.clone(), inverse: leaf.inverse.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        for reference in [first, self.best.as_ref().unwrap()] {
            if reference.code == leaf.code {
                // leaf relabeled by `labeling` equals reference relabeled by its labeling
                let auto: Vec<usize> = labeling.iter().map(|&l| reference.inverse[l]).collect();
                let level = Self::common_prefix(&reference.path, &leaf.path);
                self.automorphisms.push(auto);
                return Some(level);
            }
        }
        if leaf.code < self.best.as_ref().unwrap().code {
            self.best = Some(leaf);
        }
        None
    }

    /// Orbit representatives (union-find roots) under the automorphisms that
    /// fix every vertex of `path`.
    fn orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for auto in &self.automorphisms {
            if path.iter().any(|&v| auto[v] != v) {
                continue;
            }
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, auto[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn search(&mut self, p: Partition, path: &mut Vec<usize>) -> Option<usize> {
        let Some(cell) = p.target_cell() else {
            return self.visit_leaf(&p, path);
        };
        let level = path.len();
        let mut tried_roots: Vec<usize> = Vec::new();
        for v in cell {
            let roots = self.orbits(path);
            if tried_roots.iter().any(|&r| roots[r] == roots[v]) {
                continue;
            }
            tried_roots.push(v);
            let mut child = p.individualize(v);
            child.refine(self.g);
            path.push(v);
            let jump = self.search(child, path);
            path.pop();
            if let Some(target) = jump {
                if target < level {
                    return Some(target);
                }
            }
        }
        None
    }
}

/// A canonical labeling of `g` as `perm[old] = new`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut p = Partition::unit(g.order());
    p.refine(g);
    if p.is_discrete() {
        return p.cell;
    }
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    search.search(p, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; best.inverse.len()];
    for (new, &old) in best.inverse.iter().enumerate() {
        perm[old] = new;
    }
    perm
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(to_graph6_bytes(&g.relabel(&canonical_labeling(g))))
}

/// Isomorphism test: cheap invariant screens, then canonical forms.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}
