use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {id} out of range for a graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("graph has {n} vertices, more than the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("size mismatch: expected {expected} vertices, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertices {0} and {1} lie in different components")]
    Unreachable(usize, usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("geodesic enumeration exceeded its guard: {0}")]
    GuardExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition {condition} violated: {message}")]
    Precondition { condition: u8, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
