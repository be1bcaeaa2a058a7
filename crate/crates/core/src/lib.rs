//! Exact zero forcing numbers, triangle numbers of zero-nonzero patterns, and
//! a verification engine for the identities linking them on cobipartite
//! graphs.

pub mod bitset;
pub mod cobipartite;
pub mod corpus;
pub mod error;
pub mod forcing;
pub mod graph;
pub mod io;
pub mod pattern;
mod util;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{CliquePartition, Graph, LoopGraph};
pub use pattern::{IndexedSubmatrix, Pattern};
