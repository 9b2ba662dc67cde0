//! Exact-arithmetic counting and enumeration for the independent subsets
//! of powers of paths (P_n^(h)) and cycles (Q_n^(h)).
//!
//! The crate provides:
//!
//! - [`sequences`]: zero-extended binomials, the h-Fibonacci and h-Lucas
//!   sequence families, and discrete convolution;
//! - [`path`] / [`cycle`]: the by-size and total subset counts and the
//!   Hasse-diagram edge counts of both families, each computable by
//!   several independent routes;
//! - [`graph`], [`enumerate`], [`hasse`]: explicit graph construction and
//!   brute-force enumeration, the ground truth the formulas are checked
//!   against, including the Fibonacci/Lucas cube correspondence;
//! - [`verify`]: the cross-checking suites behind the CLI.
//!
//! All counts are arbitrary-precision ([`ExactInt`]); every function here
//! is pure and safe to call concurrently.

pub mod cycle;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod hasse;
pub mod path;
pub mod report;
pub mod sequences;
pub mod verify;

/// Exact arbitrary-precision integer used for every count in the crate.
pub type ExactInt = num_bigint::BigInt;

pub use cycle::{
    conjecture_boundary, conjecture_scan, m_edges_closed, m_edges_conjecture, m_edges_weighted,
    q_count, q_total, q_total_rec,
};
pub use enumerate::{
    build_hamming_cube, characteristic_string, BinaryString, CubeVariant, Enumerator,
    IndependenceCensus, DEFAULT_ENUM_LIMIT,
};
pub use error::{Error, Result};
pub use graph::{build_graph, Graph, GraphFamily, GraphSpec, VertexSet};
pub use hasse::{build_hasse, HasseDiagram};
pub use path::{
    h_edges_conv, h_edges_via_t, h_edges_weighted, p_count, p_total, p_total_rec, pbar_count,
    pbar_total, t_coeff,
};
pub use report::{Mismatch, VerificationReport};
pub use sequences::{binom, convolve, h_fibonacci, h_lucas, SequenceFamily, SequenceSpec};
