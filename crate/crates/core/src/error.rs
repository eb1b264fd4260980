use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },

    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),

    #[error("vertex {vertex} is not in a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("invalid vertex set: {0}")]
    InvalidSubset(String),

    #[error("invalid balanced hypercube vertex: {0}")]
    InvalidVertex(String),

    #[error("{what} has size {size}, above the limit {limit}")]
    TooLarge {
        what: String,
        size: u128,
        limit: u128,
    },

    #[error("budget exhausted: {0}")]
    BudgetExceeded(String),

    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Refusals are size and budget limits, as opposed to malformed input
    /// or failed checks.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::TooLarge { .. } | Error::BudgetExceeded(_) | Error::OutOfRange(_)
        )
    }
}
