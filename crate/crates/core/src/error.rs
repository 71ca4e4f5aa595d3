use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    SelfLoop(usize),
    InvalidArgument(String),
    InvalidBipartition(String),
    InvalidColoring(String),
    InvalidDecomposition(String),
    NotCoBipartite,
    /// The search visited more nodes than its [`Budget`](crate::Budget) allows.
    BudgetExceeded {
        limit: u64,
    },
    /// The instance is larger than the exact routine supports.
    TooLarge {
        n: usize,
        max: usize,
    },
    /// An internal consistency check failed; always a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::InvalidBipartition(msg) => write!(f, "invalid bipartition: {msg}"),
            Error::InvalidColoring(msg) => write!(f, "invalid coloring: {msg}"),
            Error::InvalidDecomposition(msg) => write!(f, "invalid decomposition: {msg}"),
            Error::NotCoBipartite => f.write_str("graph is not the complement of a bipartite graph"),
            Error::BudgetExceeded { limit } => {
                write!(f, "search budget of {limit} nodes exceeded")
            }
            Error::TooLarge { n, max } => {
                write!(f, "graph on {n} vertices exceeds the supported maximum of {max}")
            }
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
