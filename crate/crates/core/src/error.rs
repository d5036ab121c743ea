use thiserror::Error;

/// Errors raised by graph construction, enumeration, and the counting routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{count} vertices exceeds the limit of {max}")]
    TooManyVertices { count: usize, max: usize },
    #[error("{count} edges exceeds the enumeration limit of {max}")]
    TooManyEdges { count: usize, max: usize },
    #[error("minimum of the empty vertex set")]
    EmptySet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertices 1..={0} are not pairwise adjacent")]
    NotAClique(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("orientation contains a directed cycle")]
    CyclicOrientation,
    #[error("vertex {0} has no neighbour with a smaller label")]
    BadLabeling(usize),
    #[error("resource budget exceeded: {what} (limit {limit})")]
    ResourceBudgetExceeded { what: &'static str, limit: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("result has a non-integer coefficient")]
    NonIntegerResult,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
