//! Exact invertibility analysis of graphs with a unique perfect matching.
//!
//! The crate decides whether the integral inverse of a graph's adjacency
//! matrix can be signed to a nonnegative or nonpositive matrix by a ±1
//! diagonal similarity, builds the resulting inverse multigraphs, and
//! enumerates every small connected graph with a unique perfect matching.
//!
//! All arithmetic is exact: determinants, inverses and characteristic
//! polynomials use arbitrary-precision integers and rationals.

pub mod dot;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invertibility;
pub mod iso;
pub mod linalg;
pub mod matching;
pub mod signing;

pub use dot::to_dot;
pub use enumeration::{
    census, connected_graphs, unique_pm_graphs, Census, CensusEntry, VerdictCounts,
};
pub use error::{Error, Result};
pub use graph::{Edge, Multigraph, Permutation, SimpleGraph, WeightMatrix};
pub use graph6::{from_graph6, to_graph6};
pub use invertibility::{
    classify, inverse_graph, involution_check, is_selfinvertible, max_unique_pm_subgraphs,
    Classification, InverseGraph, Verdict,
};
pub use iso::{canonical_form, canonical_labeling, embeds, find_embedding, is_isomorphic};
pub use linalg::{
    char_poly, determinant, inverse_exact, is_integral, IntMatrix, IntPolynomial, RationalMatrix,
};
pub use matching::{corona, has_unique_pm, kotzig_bridge, perfect_matchings, Matching};
pub use signing::{signability, Signing, Target};
