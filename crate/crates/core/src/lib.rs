//! Clique and independent-set solvers for geometric intersection graphs.
//!
//! The core is a randomized (1−ε)-approximation for Maximum Independent Set
//! on graphs with bounded neighborhood VC-dimension, linear independence
//! number, and bounded induced odd cycle packing. Geometric frontends reduce
//! Maximum Clique on disk graphs, unit ball graphs, and diameter-1 point
//! subsets in R³ to that core. Exact oracles, the classic unit-disk
//! algorithm, and self-verifying hardness-instance generators round out the
//! toolkit.

pub mod bipartite;
pub mod cliquefront;
pub mod docs;
pub mod eptas;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod oddcycle;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{Graph, TwoColoring, Vertex};
