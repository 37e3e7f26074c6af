//! Isomorphism-free enumeration of connected tricyclic graphs and the
//! classification check built on it.
//!
//! Two independent generators exist. The naive one walks every edge subset of
//! size `n + 2` on `n` labelled vertices. The structured one builds each base
//! by subdividing the fifteen reduced multigraphs and then hangs rooted trees
//! off base vertices. Both deduplicate by canonical form.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::audit::{audit_linear, long_internal_paths, LemmaViolation};
use crate::bases::{subdivide, Arc, REDUCED_CATALOG};
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::families::Catalog;
use crate::graph::Graph;
use crate::io::parse_graph6;
use crate::linearity::{check_two_walk_linear, is_integral};
use crate::spectral::{main_eigen_report, main_eigenvalue_count_exact};

/// Largest order accepted by [`enumerate_tricyclic_naive`].
pub const NAIVE_MAX_ORDER: usize = 8;
/// Largest order accepted by [`enumerate_tricyclic_structured`].
pub const STRUCTURED_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Naive,
    Structured,
}

impl Strategy {
    pub fn max_order(self) -> usize {
        match self {
            Strategy::Naive => NAIVE_MAX_ORDER,
            Strategy::Structured => STRUCTURED_MAX_ORDER,
        }
    }
}

fn decode(forms: BTreeSet<CanonicalForm>) -> Vec<Graph> {
    forms
        .into_iter()
        .map(|f| parse_graph6(f.as_graph6()).expect("canonical forms are valid graph6"))
        .collect()
}

/// Canonical forms of all connected graphs with `n` vertices and `n + 2`
/// edges, by brute force over edge subsets.
pub fn naive_forms(n: usize) -> Result<BTreeSet<CanonicalForm>> {
    if n > NAIVE_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, limit: NAIVE_MAX_ORDER });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = n + 2;
    if m > pairs.len() {
        return Ok(BTreeSet::new());
    }
    // shard by the lowest chosen edge
    let shards: Vec<BTreeSet<CanonicalForm>> = (0..=pairs.len() - m)
        .into_par_iter()
        .map(|first| {
            let mut seen = BTreeSet::new();
            let rest = pairs.len() - first - 1;
            for_each_combination(rest, m - 1, |tail| {
                let mask: u32 = (1 << first) | (tail << (first + 1));
                if let Some(g) = graph_of_mask(n, &pairs, mask) {
                    seen.insert(canonical_form(&g));
                }
            });
            seen
        })
        .collect();
    Ok(shards.into_iter().flatten().collect())
}

/// Calls `f` with every `k`-subset of `0..len` as a bit mask (Gosper's hack).
fn for_each_combination(len: usize, k: usize, mut f: impl FnMut(u32)) {
    if k > len {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit: u64 = 1 << len;
    let mut x: u64 = (1 << k) - 1;
    while x < limit {
        f(x as u32);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

/// The graph of an edge mask, if it is connected and its degrees are
/// non-increasing in the vertex label. Every isomorphism class has such a
/// labelling, so the filter loses nothing.
fn graph_of_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> Option<Graph> {
    let mut degree = [0u8; NAIVE_MAX_ORDER];
    let mut adj = [0u16; NAIVE_MAX_ORDER];
    let mut bits = mask;
    while bits != 0 {
        let (u, v) = pairs[bits.trailing_zeros() as usize];
        degree[u] += 1;
        degree[v] += 1;
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        bits &= bits - 1;
    }
    if degree[..n].windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    let all: u16 = ((1u32 << n) - 1) as u16;
    let (mut reached, mut frontier) = (1u16, 1u16);
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        frontier = next & !reached;
        reached |= next;
    }
    if reached != all {
        return None;
    }
    let edges = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
    Some(Graph::from_normalized(n, edges))
}

/// Every connected tricyclic graph on `n ≤ 8` vertices, once per isomorphism
/// class, as canonical representatives sorted by canonical form.
pub fn enumerate_tricyclic_naive(n: usize) -> Result<Vec<Graph>> {
    Ok(decode(naive_forms(n)?))
}

/// Rooted trees on `m ≥ 1` vertices up to rooted isomorphism, as parent
/// arrays (`parent[0]` is unused). Generated from canonical level sequences
/// in reverse lexicographic order.
pub fn rooted_trees(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return Vec::new();
    }
    let mut level: Vec<usize> = (0..m).collect();
    let mut out = Vec::new();
    loop {
        let mut parent = vec![0; m];
        for i in 1..m {
            parent[i] = (0..i).rev().find(|&j| level[j] + 1 == level[i]).unwrap();
        }
        out.push(parent);
        let Some(p) = (0..m).rev().find(|&i| level[i] > 1) else {
            return out;
        };
        let q = (0..p).rev().find(|&j| level[j] + 1 == level[p]).unwrap();
        for i in p..m {
            level[i] = level[i - (p - q)];
        }
    }
}

/// Every way to write `total` as an ordered sum of `parts` non-negative terms.
fn compositions(total: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn go(remaining: usize, parts: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() + 1 == parts {
            acc.push(remaining);
            f(acc);
            acc.pop();
            return;
        }
        for x in 0..=remaining {
            acc.push(x);
            go(remaining - x, parts, acc, f);
            acc.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    go(total, parts, &mut Vec::with_capacity(parts), f);
}

/// Base graphs of order at most `n`, one per reduced multigraph and length
/// vector (isomorphic repeats included).
fn bases_up_to(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for &(k, ends, _) in &REDUCED_CATALOG {
        if k > n {
            continue;
        }
        // each arc of length l contributes l - 1 interior vertices
        let budget = n - k;
        let mut lengths = vec![1; ends.len()];
        'lengths: loop {
            let arcs: Vec<Arc> = ends.iter().zip(&lengths).map(|(&e, &length)| Arc { ends: e, length }).collect();
            if let Some(g) = subdivide(k, &arcs) {
                out.push(g);
            }
            // odometer over length vectors using at most `budget` interior vertices
            let mut i = 0;
            loop {
                if i == lengths.len() {
                    break 'lengths;
                }
                lengths[i] += 1;
                if lengths.iter().map(|l| l - 1).sum::<usize>() <= budget {
                    break;
                }
                lengths[i] = 1;
                i += 1;
            }
        }
    }
    out
}

/// All graphs obtained from `base` by hanging rooted trees with `extra`
/// new vertices in total.
fn decorate(base: &Graph, extra: usize, trees: &[Vec<Vec<usize>>], f: &mut impl FnMut(Graph)) {
    let b = base.order();
    compositions(extra, b, &mut |sizes: &[usize]| {
        let hosts: Vec<(usize, usize)> = sizes.iter().copied().enumerate().filter(|&(_, s)| s > 0).collect();
        let mut choice = vec![0usize; hosts.len()];
        loop {
            let mut edges = base.edges().to_vec();
            let mut next = b;
            for (&(v, s), &c) in hosts.iter().zip(&choice) {
                let parent = &trees[s + 1][c];
                let start = next;
                let label = |i: usize| if i == 0 { v } else { start + i - 1 };
                for i in 1..=s {
                    edges.push((label(parent[i]), label(i)));
                }
                next += s;
            }
            f(Graph::from_edge_list(next, &edges).expect("decorations are simple"));
            let mut i = 0;
            while i < hosts.len() {
                choice[i] += 1;
                if choice[i] < trees[hosts[i].1 + 1].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == hosts.len() {
                break;
            }
        }
    });
}

/// Canonical forms of all connected tricyclic graphs of order `n`, built as
/// bases with trees attached.
pub fn structured_forms(n: usize) -> Result<BTreeSet<CanonicalForm>> {
    if n > STRUCTURED_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, limit: STRUCTURED_MAX_ORDER });
    }
    let trees: Vec<Vec<Vec<usize>>> = (0..=n + 1).map(rooted_trees).collect();
    let shards: Vec<BTreeSet<CanonicalForm>> = bases_up_to(n)
        .into_par_iter()
        .map(|base| {
            let mut seen = BTreeSet::new();
            decorate(&base, n - base.order(), &trees, &mut |g| {
                seen.insert(canonical_form(&g));
            });
            seen
        })
        .collect();
    Ok(shards.into_iter().flatten().collect())
}

/// Same classes as [`enumerate_tricyclic_naive`], for `n ≤ 12`.
pub fn enumerate_tricyclic_structured(n: usize) -> Result<Vec<Graph>> {
    Ok(decode(structured_forms(n)?))
}

pub fn enumerate_forms(n: usize, strategy: Strategy) -> Result<BTreeSet<CanonicalForm>> {
    match strategy {
        Strategy::Naive => naive_forms(n),
        Strategy::Structured => structured_forms(n),
    }
}

/// A positive graph together with the lemma checks it failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditFailure {
    pub graph6: String,
    pub violations: Vec<LemmaViolation>,
}

/// Census of one order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnumerationReport {
    pub order: usize,
    pub strategy: Strategy,
    /// Connected tricyclic graphs up to isomorphism.
    pub total: usize,
    /// Graphs with exactly two main eigenvalues (exact count).
    pub positives: usize,
    /// Graphs isomorphic to a catalog member.
    pub classified: usize,
    /// Positive XOR classified.
    pub counterexamples: Vec<String>,
    /// Two main eigenvalues XOR 2-walk linear.
    pub hagos_failures: Vec<String>,
    /// Exact and floating-point main-eigenvalue counts differ.
    pub float_disagreements: Vec<String>,
    /// Linear with a non-integral coefficient.
    pub non_integral: Vec<String>,
    /// Positives failing a structural lemma check on `G`.
    pub lemma_violations: Vec<AuditFailure>,
    /// Positives whose `G_0` has an internal path longer than three edges.
    pub g0_long_paths: Vec<String>,
    /// Catalog members of this order absent from the enumeration.
    pub missing_catalog_members: Vec<String>,
    /// Positives per catalog family (`H7`, `G2`, ...).
    pub families: BTreeMap<String, usize>,
    /// Positives as graph6, in canonical-form order.
    pub positive_graphs: Vec<String>,
}

impl EnumerationReport {
    /// No counterexample, equivalence failure or cross-check failure.
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
            && self.hagos_failures.is_empty()
            && self.float_disagreements.is_empty()
            && self.non_integral.is_empty()
            && self.lemma_violations.is_empty()
            && self.g0_long_paths.is_empty()
            && self.missing_catalog_members.is_empty()
    }
}

struct Analysis {
    graph6: String,
    positive: bool,
    family: Option<String>,
    hagos_ok: bool,
    float_ok: bool,
    integral_ok: bool,
    violations: Vec<LemmaViolation>,
    g0_long: bool,
}

fn analyze(form: &CanonicalForm, catalog: &Catalog) -> Analysis {
    let g = parse_graph6(form.as_graph6()).expect("canonical forms are valid graph6");
    let report = main_eigen_report(&g);
    let exact = report.as_ref().map_or_else(|_| main_eigenvalue_count_exact(&g), |r| r.exact_count);
    let verdict = check_two_walk_linear(&g);
    let positive = exact == 2;
    let mut violations = Vec::new();
    let mut g0_long = false;
    if positive {
        if let Some((a, b)) = verdict.integer_pair() {
            violations = audit_linear(&g, a, b);
        }
        g0_long = !long_internal_paths(&g.strip_pendants_once()).is_empty();
    }
    Analysis {
        graph6: form.as_graph6().to_string(),
        positive,
        family: catalog.classify_form(form).map(|id| id.kind()),
        hagos_ok: positive == verdict.is_linear(),
        float_ok: report.map_or(false, |r| r.agrees()),
        integral_ok: !verdict.is_linear() || is_integral(&verdict).unwrap_or(false),
        violations,
        g0_long,
    }
}

/// Analyzes one order given its canonical forms.
pub fn report_for_forms(
    n: usize,
    strategy: Strategy,
    forms: &BTreeSet<CanonicalForm>,
    catalog: &Catalog,
) -> EnumerationReport {
    let analyses: Vec<Analysis> = forms.par_iter().map(|f| analyze(f, catalog)).collect();
    let mut r = EnumerationReport {
        order: n,
        strategy,
        total: analyses.len(),
        positives: 0,
        classified: 0,
        counterexamples: Vec::new(),
        hagos_failures: Vec::new(),
        float_disagreements: Vec::new(),
        non_integral: Vec::new(),
        lemma_violations: Vec::new(),
        g0_long_paths: Vec::new(),
        missing_catalog_members: Vec::new(),
        families: BTreeMap::new(),
        positive_graphs: Vec::new(),
    };
    for a in analyses {
        r.positives += usize::from(a.positive);
        r.classified += usize::from(a.family.is_some());
        if a.positive != a.family.is_some() {
            r.counterexamples.push(a.graph6.clone());
        }
        if !a.hagos_ok {
            r.hagos_failures.push(a.graph6.clone());
        }
        if !a.float_ok {
            r.float_disagreements.push(a.graph6.clone());
        }
        if !a.integral_ok {
            r.non_integral.push(a.graph6.clone());
        }
        if !a.violations.is_empty() {
            r.lemma_violations.push(AuditFailure { graph6: a.graph6.clone(), violations: a.violations });
        }
        if a.g0_long {
            r.g0_long_paths.push(a.graph6.clone());
        }
        if a.positive {
            if let Some(kind) = a.family {
                *r.families.entry(kind).or_default() += 1;
            }
            r.positive_graphs.push(a.graph6);
        }
    }
    for (form, id) in catalog.forms_of_order(n) {
        if !forms.contains(form) {
            r.missing_catalog_members.push(id.to_string());
        }
    }
    r
}

/// Checks the classification at every order `1..=n_max`.
pub fn verify_theorem(n_max: usize, strategy: Strategy) -> Result<Vec<EnumerationReport>> {
    if n_max > strategy.max_order() {
        return Err(Error::OrderTooLarge { order: n_max, limit: strategy.max_order() });
    }
    let catalog = Catalog::up_to(n_max);
    (1..=n_max)
        .map(|n| Ok(report_for_forms(n, strategy, &enumerate_forms(n, strategy)?, &catalog)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_tree_counts() {
        let counts: Vec<usize> = (1..=8).map(|m| rooted_trees(m).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 20, 48, 115]);
    }

    #[test]
    fn combinations_are_counted() {
        let mut count = 0;
        for_each_combination(6, 3, |m| {
            assert_eq!(m.count_ones(), 3);
            count += 1;
        });
        assert_eq!(count, 20);
    }

    #[test]
    fn order_four_is_k4() {
        assert_eq!(enumerate_tricyclic_naive(4).unwrap(), vec![crate::io::parse_graph6("C~").unwrap()]);
        let s = enumerate_tricyclic_structured(4).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(canonical_form(&s[0]), canonical_form(&Graph::complete(4)));
    }

    #[test]
    fn below_four_is_empty() {
        for n in 0..4 {
            assert!(naive_forms(n).unwrap().is_empty());
            assert!(structured_forms(n).unwrap().is_empty());
        }
    }

    #[test]
    fn guards() {
        assert_eq!(naive_forms(9), Err(Error::OrderTooLarge { order: 9, limit: 8 }));
        assert!(matches!(verify_theorem(13, Strategy::Structured), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn strategies_agree_small() {
        for n in 4..=6 {
            assert_eq!(naive_forms(n).unwrap(), structured_forms(n).unwrap(), "n = {n}");
        }
    }
}
