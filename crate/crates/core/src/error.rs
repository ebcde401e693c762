use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    /// An operation was called on input that violates its documented contract.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Exact solvers refuse instances above the configured size guard rather
    /// than return an incomplete answer.
    #[error("instance too large: {n} vertices exceeds the size guard of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("parse error on line {line}: {message}")]
    ParseLine { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
