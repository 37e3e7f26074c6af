//! Exact analysis of graphs with exactly two main eigenvalues, focused on
//! tricyclic graphs.
//!
//! A graph has exactly two main eigenvalues iff it is 2-walk `(a, b)`-linear:
//! the sum `S(v)` of neighbour degrees satisfies `S(v) = a·d(v) + b` at every
//! vertex for a unique pair `(a, b)`. This crate decides that criterion in
//! exact arithmetic, counts main eigenvalues independently (walk-matrix rank
//! and a floating-point eigensolver), constructs the known catalog of
//! tricyclic graphs with two main eigenvalues, and checks the catalog against
//! exhaustive enumeration at small orders.

pub mod audit;
pub mod bases;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod linearity;
pub mod spectral;

pub use bases::{base_type, BaseType, ReducedMultigraph};
pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use enumerate::{verify_theorem, EnumerationReport, Strategy};
pub use error::{Error, Result};
pub use families::{build_base, build_g_family, build_h, classify, Catalog, FamilyId};
pub use graph::Graph;
pub use io::{parse_graph6, to_graph6, Format};
pub use linearity::{check_two_walk_linear, LinearityVerdict, Rational};
pub use spectral::{main_eigen_report, main_eigenvalue_count_exact, MainEigenReport, WalkMatrix};
