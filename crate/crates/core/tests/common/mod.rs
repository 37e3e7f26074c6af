#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tricyclic_core::Graph;

/// Random spanning tree plus each remaining pair independently with
/// probability `p`, randomly relabelled.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for v in 1..n {
        pairs.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edge_list(n, &pairs).unwrap().relabel(&perm)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Isomorphism by trying every bijection.
pub fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if g.edges().iter().all(|&(u, v)| h.has_edge(perm[u], perm[v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Dense rank over the rationals by Gaussian elimination on fractions,
/// independent of the library's fraction-free routine.
pub fn rational_rank(rows: Vec<Vec<i128>>) -> usize {
    use num_rational::Ratio;
    let mut m: Vec<Vec<Ratio<i128>>> =
        rows.into_iter().map(|r| r.into_iter().map(Ratio::from_integer).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != Ratio::from_integer(0)) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != Ratio::from_integer(0) {
                let f = m[r][c] / m[rank][c];
                for k in c..cols {
                    let x = m[rank][k];
                    m[r][k] -= f * x;
                }
            }
        }
        rank += 1;
    }
    rank
}
