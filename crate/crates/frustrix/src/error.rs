use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge index {index} out of range for a graph with {m} edges")]
    EdgeOutOfRange { index: usize, m: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no cycle")]
    NoCycle,

    #[error("graph is not simple")]
    NotSimple,

    #[error("signatures belong to different underlying graphs")]
    GraphMismatch,

    #[error("capacity exceeded: {what} supports at most {max}, got {actual}")]
    Capacity {
        what: &'static str,
        max: usize,
        actual: usize,
    },

    #[error("construction error: {0}")]
    Construction(String),

    #[error("rule {rule} inapplicable: {reason}")]
    RuleInapplicable { rule: &'static str, reason: String },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }

    /// Attaches a line number to a parse error produced without one.
    pub fn at_line(self, line: usize) -> Error {
        match self {
            Error::Parse { message, .. } => Error::Parse { line, message },
            other => other,
        }
    }
}
