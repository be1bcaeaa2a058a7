use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} is limited to {limit}, got {got}")]
    SizeCap {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("invalid clique partition: {0}")]
    InvalidPartition(String),
    #[error("({v1}, {v2}) is not a partition of the vertex set")]
    NotAPartition { v1: String, v2: String },
    #[error("selection is not square: {rows} rows, {cols} columns")]
    NonSquare { rows: usize, cols: usize },
    #[error("cannot delete every vertex of the graph")]
    EmptyDeletion,
    #[error("pattern has no nonzero entries")]
    AllZeroPattern,
    #[error("forcing record does not fill the whole graph")]
    IncompleteRecord,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cap(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        Err(Error::SizeCap { what, limit, got })
    } else {
        Ok(())
    }
}
