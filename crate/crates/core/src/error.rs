use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

/// Errors raised by graph construction, I/O and the coloring operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge id {edge} (graph has {m} edges)")]
    InvalidEdge { edge: EdgeId, m: usize },

    #[error("malformed {format} input: {reason}")]
    Malformed { format: &'static str, reason: String },

    #[error("graph is not regular")]
    NotRegular,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("coloring is not proper: edges {0} and {1} share an endpoint and a label")]
    Improper(EdgeId, EdgeId),

    #[error("no qualifying edge found")]
    NotFound,

    #[error("no labeling with labels up to {0} exists")]
    NoneFound(u64),

    #[error("label sum overflow")]
    Overflow,

    #[error("recoloring walk stalled at vertex {vertex}: {reason} (the supplied class d+1 is not minimum)")]
    NotMinimal { vertex: VertexId, reason: String },

    #[error("internal contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Short machine-readable tag used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SelfLoop(_) => "self_loop",
            Error::DuplicateEdge(..) => "duplicate_edge",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::InvalidEdge { .. } => "invalid_edge",
            Error::Malformed { .. } => "malformed",
            Error::NotRegular => "not_regular",
            Error::Precondition(_) => "precondition",
            Error::Improper(..) => "improper",
            Error::NotFound => "not_found",
            Error::NoneFound(_) => "none_found",
            Error::Overflow => "overflow",
            Error::NotMinimal { .. } => "not_minimal",
            Error::Contract(_) => "contract",
        }
    }
}
