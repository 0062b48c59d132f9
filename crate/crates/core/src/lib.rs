//! Recognition, decomposition and coloring of graphs that exclude
//! propellers (a chordless cycle plus a node with two or more neighbors on
//! it) as subgraphs or as induced subgraphs.
//!
//! * [`graph`]: the graph type and connectivity primitives.
//! * [`cutset`]: K2-, S2- and I-cutsets and blocks of decomposition.
//! * [`recognition`]: membership tests and decomposition reports.
//! * [`coloring`]: vertex 3-coloring and Δ-edge-coloring.
//! * [`oracle`]: brute-force reference implementations.
//! * [`generators`]: test instances with known membership.

pub mod coloring;
pub mod cutset;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::{Cycle, Graph, Path};
pub use oracle::{CapReason, Capped, EnumerationBudget};
pub use recognition::{is_in_c1, is_in_c2, DecompositionReport, PropellerWitness};
