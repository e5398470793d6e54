use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("wheel requires at least 3 rim vertices (got {0})")]
    WheelTooSmall(usize),
    #[error("fan requires at least 1 path vertex (got {0})")]
    FanTooSmall(usize),
    #[error("negative sequence index {0}")]
    NegativeIndex(i64),
    #[error("edge {{{0}, {1}}} is a loop")]
    Loop(VertexId, VertexId),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("edge {{{0}, {1}}} is not an edge of the graph")]
    NotInGraph(VertexId, VertexId),
    #[error("vertices must be distinct (got {0} twice)")]
    SameVertex(VertexId),
    #[error("infinite resistance: graph is disconnected")]
    InfiniteResistance,
    #[error("cycle distance {k} exceeds floor({n}/2)")]
    DistanceOutOfRange { n: usize, k: usize },
    #[error("enumeration cap exceeded: {vertex_count} vertices > cap {cap}")]
    CapExceeded { vertex_count: usize, cap: usize },
    #[error("invalid wheel forest: {0}")]
    InvalidForest(String),
    #[error("invalid fan tree: {0}")]
    InvalidFanTree(String),
    #[error("not in the image convention: {0}")]
    NotInImage(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
