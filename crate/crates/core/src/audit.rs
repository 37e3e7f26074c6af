//! Structural consequences of 2-walk linearity for tricyclic graphs, checked
//! on concrete graphs.
//!
//! * Route bound: every internal path (not cycle) of `G` has at most three
//!   edges, and when one has exactly three edges, starting at `x1`, no path
//!   `y1 y2 y3` has `d(y1) = d(y3) = d(x1)` and `d(y2) = 2`.
//! * Degree dichotomy: every vertex `v` of `G_0` has `d(v) = d_{G_0}(v)` or
//!   `d(v) = a + b`.
//! * Pendant condition: if `G` has a pendant `x`, then `S(x) = a + b ≥ 3` and
//!   `a ≥ 2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{internal_paths, Graph, InternalPath};
use crate::linearity::{check_two_walk_linear, vertex_sum};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LemmaViolation {
    LongInternalPath { path: Vec<usize>, length: usize },
    /// A three-edge route starting at `route[0]` coexists with the path `witness`.
    ForbiddenShortPath { route: Vec<usize>, witness: [usize; 3] },
    DegreeDichotomy { vertex: usize, degree: usize, base_degree: usize, a_plus_b: i64 },
    PendantSum { vertex: usize, sum: u64, a_plus_b: i64 },
    PendantSlope { a: i64, a_plus_b: i64 },
}

/// Internal paths of `h` (cycles excluded) longer than three edges.
pub fn long_internal_paths(h: &Graph) -> Vec<InternalPath> {
    internal_paths(h).into_iter().filter(|p| !p.is_cycle() && p.length() > 3).collect()
}

fn forbidden_short_path(g: &Graph, end_degree: usize) -> Option<[usize; 3]> {
    (0..g.order()).filter(|&y2| g.degree(y2) == 2).find_map(|y2| {
        let [y1, y3] = [g.neighbors(y2)[0], g.neighbors(y2)[1]];
        (g.degree(y1) == end_degree && g.degree(y3) == end_degree).then_some([y1, y2, y3])
    })
}

/// All violations for a graph that is 2-walk `(a, b)`-linear.
pub fn audit_linear(g: &Graph, a: i64, b: i64) -> Vec<LemmaViolation> {
    let mut out = Vec::new();
    for p in internal_paths(g).into_iter().filter(|p| !p.is_cycle()) {
        if p.length() > 3 {
            out.push(LemmaViolation::LongInternalPath { length: p.length(), path: p.vertices });
        } else if p.length() == 3 {
            for x1 in [p.start(), p.end()] {
                if let Some(witness) = forbidden_short_path(g, g.degree(x1)) {
                    let mut route = p.vertices.clone();
                    if x1 != p.start() {
                        route.reverse();
                    }
                    out.push(LemmaViolation::ForbiddenShortPath { route, witness });
                }
            }
        }
    }

    let (g0, original) = g.strip_pendants_once_mapped();
    for (v0, &v) in original.iter().enumerate() {
        let (degree, base_degree) = (g.degree(v), g0.degree(v0));
        if degree != base_degree && degree as i64 != a + b {
            out.push(LemmaViolation::DegreeDichotomy { vertex: v, degree, base_degree, a_plus_b: a + b });
        }
    }

    let pendants = g.pendant_vertices();
    for &x in &pendants {
        let sum = vertex_sum(g, x).expect("pendant is a vertex");
        if sum as i64 != a + b || a + b < 3 {
            out.push(LemmaViolation::PendantSum { vertex: x, sum, a_plus_b: a + b });
        }
    }
    if !pendants.is_empty() && a < 2 {
        out.push(LemmaViolation::PendantSlope { a, a_plus_b: a + b });
    }
    out
}

/// [`audit_linear`] with `(a, b)` taken from the linearity verdict.
pub fn audit(g: &Graph) -> Result<Vec<LemmaViolation>> {
    let (a, b) = check_two_walk_linear(g).integer_pair().ok_or(Error::NotLinear)?;
    Ok(audit_linear(g, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_g_family, build_h};

    #[test]
    fn catalog_samples_pass() {
        for i in [1, 7, 11, 13, 20, 30] {
            assert_eq!(audit(&build_h(i).unwrap()).unwrap(), vec![], "H{i}");
        }
        assert_eq!(audit(&build_g_family(1, &[4]).unwrap()).unwrap(), vec![]);
        assert_eq!(audit(&build_g_family(7, &[3]).unwrap()).unwrap(), vec![]);
    }

    #[test]
    fn long_route_reported() {
        // theta graph with routes of length 1, 2 and 4
        let g = Graph::from_edge_list(
            6,
            &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 5), (5, 1)],
        )
        .unwrap();
        let long = long_internal_paths(&g);
        assert_eq!(long.len(), 1);
        assert_eq!(long[0].length(), 4);
        assert!(audit_linear(&g, 1, 1)
            .iter()
            .any(|v| matches!(v, LemmaViolation::LongInternalPath { length: 4, .. })));
    }

    #[test]
    fn decorated_route_is_long_only_after_stripping() {
        // the v route of G1 carries pendants, so it is short in G but its
        // image in G_0 has l1 + 1 edges
        let g = build_g_family(1, &[4]).unwrap();
        assert!(long_internal_paths(&g).is_empty());
        assert_eq!(long_internal_paths(&g.strip_pendants_once()).len(), 1);
    }

    #[test]
    fn pendant_conditions() {
        // P_4 is (1,1)-linear with pendants, so a + b = 2 < 3 and a < 2
        let v = audit_linear(&Graph::path(4), 1, 1);
        assert!(v.iter().any(|x| matches!(x, LemmaViolation::PendantSlope { a: 1, .. })));
        assert!(v.iter().any(|x| matches!(x, LemmaViolation::PendantSum { .. })));
    }

    #[test]
    fn non_linear_input_rejected() {
        assert_eq!(audit(&Graph::path(5)), Err(Error::NotLinear));
    }
}
