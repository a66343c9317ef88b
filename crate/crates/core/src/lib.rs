//! Deciding whether a connected graph's second largest distance eigenvalue
//! lies below −1/2.
//!
//! Two independent routes are provided and cross-checked:
//!
//! * an exact spectral route: the integer characteristic polynomial of the
//!   distance matrix ([`poly::charpoly_exact`]) and Sturm root counting on
//!   its squarefree part ([`spectral::decide_lambda2_lt_neg_half_exact`]);
//! * a structural route ([`classify::classify_structural`]) built from
//!   chordality, minimal vertex separators with multiplicities, diameter,
//!   forbidden induced subgraphs and membership in named graph families.
//!
//! The [`families`] module also re-derives the polynomial factorizations of
//! the extremal families by exact arithmetic.

pub mod chordal;
pub mod classify;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod poly;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
