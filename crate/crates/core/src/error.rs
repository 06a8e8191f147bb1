use thiserror::Error;

use crate::grid::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid edge {a}-{b}: {reason}")]
    InvalidEdge {
        a: VertexId,
        b: VertexId,
        reason: &'static str,
    },

    /// Parameters outside `2 <= m <= c <= n`.
    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("malformed family: {0}")]
    MalformedFamily(String),

    #[error("malformed labeling: {0}")]
    MalformedLabeling(String),

    #[error("incomplete labeling: no label for {0}")]
    IncompleteLabeling(String),

    #[error("weight overflow while summing labels")]
    WeightOverflow,

    /// The instance is too large to search; this is never a negative answer.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn missing_vertex(v: VertexId) -> Self {
        Error::IncompleteLabeling(format!("vertex {v}"))
    }

    pub(crate) fn missing_edge(e: EdgeId) -> Self {
        Error::IncompleteLabeling(format!("edge {e}"))
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Format(e.to_string())
    }
}
