use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid json: {0}")]
    Json(String),

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("arc ({tail}, {head}) has an endpoint outside 1..={n}")]
    EndpointOutOfRange { tail: usize, head: usize, n: usize },

    #[error("digraph contains a directed cycle")]
    Cyclic,

    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid n = {n}: {reason}")]
    InvalidN { n: usize, reason: String },

    #[error("n = {n} must be even")]
    Parity { n: usize },

    #[error("representation covers {found} vertices but digraph has {expected}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} has an empty color set")]
    EmptyColorSet { vertex: usize },

    #[error("{0}")]
    Domain(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
