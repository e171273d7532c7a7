use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{family}: {message}")]
    InvalidParameter {
        family: &'static str,
        message: String,
    },

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph has {edges} edges, above the edge budget of {limit}")]
    EdgeBudgetExceeded { edges: usize, limit: usize },

    #[error("vertices {0:?} do not form a stable set of three distinct vertices")]
    NotStable([usize; 3]),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(family: &'static str, message: impl Into<String>) -> Error {
    Error::InvalidParameter {
        family,
        message: message.into(),
    }
}
