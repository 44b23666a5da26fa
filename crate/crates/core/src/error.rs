use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} is out of range (graph has {1} vertices)")]
    InvalidVertex(VertexId, usize),

    #[error("explicit self-pair ({0}, {0}); loops are implicit")]
    SelfPair(VertexId),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(
        "configuration space too large: {total} configurations ({multisets} cop placements x {vertices} robber vertices x 2 turns) exceeds the cap of {cap}"
    )]
    Capacity {
        total: u128,
        multisets: u128,
        vertices: usize,
        cap: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inconsistent structure: {0}")]
    Structure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
