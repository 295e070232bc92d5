use thiserror::Error;

/// Everything that can go wrong when building graphs or evaluating formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge {{{0}, {1}}} added twice")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0} added twice")]
    DuplicateLoop(usize),
    #[error("edge {{{0}, {0}}} joins a vertex to itself; use a loop instead")]
    SelfEdge(usize),
    #[error("vertex {0} carries no loop")]
    NoLoop(usize),
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),
    #[error("vertex {0} must not belong to the avoided set")]
    VertexAvoided(usize),
    #[error("coefficient index {index} out of range 0..={order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("{what} requires {requirement}, got {value}")]
    InvalidArgument {
        what: &'static str,
        requirement: &'static str,
        value: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
