use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("graph is not tricyclic")]
    NotTricyclic,

    #[error("base does not match any of the eight tricyclic base types")]
    UnknownBaseType,

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },

    #[error("catalog index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("verdict is not linear")]
    NotLinear,

    #[error("eigensolver did not converge")]
    NoConvergence,

    #[error("order {order} exceeds the limit {limit} for this enumerator")]
    OrderTooLarge { order: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
