//! Invariants of binomial edge ideals of small graphs.
//!
//! Everything here is exact. Primary decomposition, dimension and
//! unmixedness come from cut sets of the graph; regularity and depth come
//! from the squarefree lex initial ideal through Hochster's formula with
//! rational homology. The [`oracle`] module is a small Buchberger
//! implementation over the rationals that certifies the combinatorial
//! routes on tiny instances.
//!
//! Vertices are 0-based `usize` indices internally. Text formats and JSON
//! reports use the 1-based labels `1..=n`.

pub mod canon;
pub mod classifier;
pub mod clique;
pub mod degeneration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod homology;
pub mod invariants;
pub mod monomial;
pub mod oracle;
pub mod primes;

pub use error::{Error, Result};
pub use graph::{Graph, Subgraph, VertexSet};
