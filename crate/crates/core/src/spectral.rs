//! Counting main eigenvalues.
//!
//! The exact count is the rank over the rationals of the walk matrix, whose
//! k-th column is `A^k·1`. It is computed by fraction-free elimination on big
//! integers, generating columns only until one is dependent on its
//! predecessors (the Krylov space is then closed under `A`).
//!
//! The floating-point count diagonalizes the adjacency matrix, groups
//! numerically equal eigenvalues and counts the eigenspaces onto which the
//! all-ones vector has a non-negligible projection.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linearity::check_two_walk_linear;

/// Default relative tolerance for grouping eigenvalues into eigenspaces.
pub const CLUSTER_TOL: f64 = 1e-8;
/// Default threshold: an eigenspace is main when the squared projection of
/// the all-ones vector exceeds `MAIN_TOL · n`.
pub const MAIN_TOL: f64 = 1e-16;

const MAX_SWEEPS: usize = 10_000;

/// Columns `A^k·1` for `k = 0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkMatrix {
    pub columns: Vec<Vec<BigInt>>,
}

impl WalkMatrix {
    pub fn dimension(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, vertex: usize, k: usize) -> &BigInt {
        &self.columns[k][vertex]
    }

    /// Rank of the first `k` columns.
    pub fn prefix_rank(&self, k: usize) -> usize {
        let mut elim = Bareiss::default();
        self.columns[..k].iter().filter(|c| elim.insert((*c).clone())).count()
    }

    pub fn rank(&self) -> usize {
        self.prefix_rank(self.columns.len())
    }
}

fn apply_adjacency(g: &Graph, x: &[BigInt]) -> Vec<BigInt> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(BigInt::zero(), |acc, &u| acc + &x[u]))
        .collect()
}

pub fn walk_matrix(g: &Graph) -> WalkMatrix {
    let n = g.order();
    let mut columns = Vec::with_capacity(n);
    if n > 0 {
        columns.push(vec![BigInt::one(); n]);
    }
    while columns.len() < n {
        let next = apply_adjacency(g, columns.last().unwrap());
        columns.push(next);
    }
    WalkMatrix { columns }
}

/// Incremental fraction-free (Bareiss) row reduction.
///
/// Each stored pivot row is kept in the form it had when it was chosen, with
/// its pivot column and pivot value. A new row is pushed through the same
/// elimination steps it would have seen had it been present from the start,
/// so every division is exact.
#[derive(Default)]
struct Bareiss {
    pivots: Vec<(usize, Vec<BigInt>)>,
}

impl Bareiss {
    /// Reduces `row` against the current pivots; returns whether it was
    /// independent (and was therefore added as a pivot).
    fn insert(&mut self, mut row: Vec<BigInt>) -> bool {
        let mut prev = BigInt::one();
        for (col, pivot_row) in &self.pivots {
            let p = &pivot_row[*col];
            let factor = row[*col].clone();
            for (x, y) in row.iter_mut().zip(pivot_row) {
                let num = p * &*x - &factor * y;
                debug_assert!(num.is_multiple_of(&prev));
                *x = num / &prev;
            }
            prev = p.clone();
        }
        match row.iter().position(|x| !x.is_zero()) {
            Some(col) => {
                self.pivots.push((col, row));
                true
            }
            None => false,
        }
    }
}

/// Number of main eigenvalues, as the rank of the walk matrix.
pub fn main_eigenvalue_count_exact(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut elim = Bareiss::default();
    let mut column = vec![BigInt::one(); n];
    let mut rank = 0;
    while rank < n && elim.insert(column.clone()) {
        rank += 1;
        column = apply_adjacency(g, &column);
    }
    rank
}

/// Eigenvalues (descending) and the matching orthonormal eigenvectors, as
/// columns of `vectors`.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: DMatrix<f64>,
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.order();
    let mut a = DMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

pub fn eigen_float(g: &Graph) -> Result<Eigen> {
    let n = g.order();
    let a = adjacency_matrix(g);
    let eps = 1e-12 * a.norm().max(1.0);
    let decomposition = SymmetricEigen::try_new(a, eps, MAX_SWEEPS).ok_or(Error::NoConvergence)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| decomposition.eigenvalues[j].total_cmp(&decomposition.eigenvalues[i]));
    let values = order.iter().map(|&i| decomposition.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| decomposition.eigenvectors[(r, order[c])]);
    Ok(Eigen { values, vectors })
}

/// Exact and floating-point main-eigenvalue counts for one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MainEigenReport {
    pub exact_count: usize,
    pub float_count: usize,
    pub main_values_float: Vec<f64>,
}

impl MainEigenReport {
    pub fn agrees(&self) -> bool {
        self.exact_count == self.float_count
    }
}

/// Floating-point part of a [`MainEigenReport`].
#[derive(Debug, Clone, PartialEq)]
pub struct FloatMainCount {
    pub count: usize,
    pub main_values: Vec<f64>,
}

pub fn main_eigenvalue_count_float(g: &Graph, cluster_tol: f64, main_tol: f64) -> Result<FloatMainCount> {
    let n = g.order();
    let eig = eigen_float(g)?;
    let scale = eig.values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut count = 0;
    let mut main_values = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && eig.values[end - 1] - eig.values[end] <= cluster_tol * scale {
            end += 1;
        }
        let projection: f64 = (start..end)
            .map(|c| eig.vectors.column(c).sum().powi(2))
            .sum();
        if projection > main_tol * n as f64 {
            count += 1;
            let mean = eig.values[start..end].iter().sum::<f64>() / (end - start) as f64;
            main_values.push(mean);
        }
        start = end;
    }
    Ok(FloatMainCount { count, main_values })
}

/// Both counts with the default tolerances.
pub fn main_eigen_report(g: &Graph) -> Result<MainEigenReport> {
    let float = main_eigenvalue_count_float(g, CLUSTER_TOL, MAIN_TOL)?;
    Ok(MainEigenReport {
        exact_count: main_eigenvalue_count_exact(g),
        float_count: float.count,
        main_values_float: float.main_values,
    })
}

/// Whether "exactly two main eigenvalues" and "2-walk linear" agree on `g`.
pub fn hagos_check(g: &Graph) -> bool {
    (main_eigenvalue_count_exact(g) == 2) == check_two_walk_linear(g).is_linear()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn walk_matrix_by_hand() {
        let c4 = walk_matrix(&Graph::cycle(4));
        assert_eq!(c4.columns, vec![ints(&[1; 4]), ints(&[2; 4]), ints(&[4; 4]), ints(&[8; 4])]);
        let star = walk_matrix(&Graph::star(3));
        assert_eq!(star.columns[1], ints(&[3, 1, 1, 1]));
        assert_eq!(star.columns[2], ints(&[3, 3, 3, 3]));
        let p3 = walk_matrix(&Graph::path(3));
        assert_eq!(p3.columns, vec![ints(&[1, 1, 1]), ints(&[1, 2, 1]), ints(&[2, 2, 2])]);
    }

    #[test]
    fn exact_counts() {
        assert_eq!(main_eigenvalue_count_exact(&Graph::cycle(7)), 1);
        assert_eq!(main_eigenvalue_count_exact(&Graph::complete(4)), 1);
        assert_eq!(main_eigenvalue_count_exact(&Graph::star(3)), 2);
        assert_eq!(main_eigenvalue_count_exact(&Graph::path(5)), 3);
        assert_eq!(main_eigenvalue_count_exact(&Graph::empty(1)), 1);
    }

    #[test]
    fn bareiss_detects_dependence() {
        let mut e = Bareiss::default();
        assert!(e.insert(ints(&[2, 4, 6])));
        assert!(e.insert(ints(&[1, 1, 1])));
        assert!(!e.insert(ints(&[3, 5, 7])));
        assert!(e.insert(ints(&[0, 0, 5])));
        assert!(!e.insert(ints(&[9, -2, 4])));
    }

    #[test]
    fn spectra() {
        let k4 = eigen_float(&Graph::complete(4)).unwrap();
        for (x, y) in k4.values.iter().zip([3.0, -1.0, -1.0, -1.0]) {
            assert!((x - y).abs() < 1e-9);
        }
        let c4 = eigen_float(&Graph::cycle(4)).unwrap();
        for (x, y) in c4.values.iter().zip([2.0, 0.0, 0.0, -2.0]) {
            assert!((x - y).abs() < 1e-9);
        }
        let s = 3f64.sqrt();
        let star = eigen_float(&Graph::star(3)).unwrap();
        for (x, y) in star.values.iter().zip([s, 0.0, 0.0, -s]) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn float_counts() {
        let c6 = main_eigenvalue_count_float(&Graph::cycle(6), CLUSTER_TOL, MAIN_TOL).unwrap();
        assert_eq!(c6.count, 1);
        assert!((c6.main_values[0] - 2.0).abs() < 1e-9);
        let star = main_eigenvalue_count_float(&Graph::star(3), CLUSTER_TOL, MAIN_TOL).unwrap();
        assert_eq!(star.count, 2);
        let s = 3f64.sqrt();
        assert!((star.main_values[0] - s).abs() < 1e-9 && (star.main_values[1] + s).abs() < 1e-9);
    }

    #[test]
    fn hagos_small_cases() {
        assert!(hagos_check(&Graph::path(4)));
        assert!(hagos_check(&Graph::cycle(5)));
        assert!(hagos_check(&Graph::path(5)));
    }
}
