use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(Vertex, Vertex),
    #[error("not a permutation of the vertex set")]
    InvalidPermutation,
    #[error("vertex sets overlap at {0}")]
    OverlappingSets(Vertex),
    #[error("cycle length must be at least 3, got {0}")]
    CycleLengthTooSmall(usize),
    #[error("partition does not cover vertex {0}")]
    Uncovered(Vertex),
    #[error("vertex {0} appears in more than one class")]
    DuplicateVertex(Vertex),
    #[error("move {index}: vertex {vertex} is not in class {from}")]
    InconsistentMove { index: usize, vertex: Vertex, from: usize },
    #[error("class index {0} out of range")]
    ClassOutOfRange(usize),
    #[error("number of colors must be at least 1")]
    ZeroColors,
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("exhaustive enumeration is capped at {cap} vertices, got {n}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
