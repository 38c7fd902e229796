//! Exact frustration indices of signed subcubic graphs, switching classes,
//! extremal families, reducible configurations and exhaustive verification
//! harnesses.

pub mod census;
pub mod connectivity;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod solver;
pub mod structure;
pub mod switching;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CutProfile, Edge, Sign, SignatureBits, SignedGraph, SwitchState, VertexSet};
