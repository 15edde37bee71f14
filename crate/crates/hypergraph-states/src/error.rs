use thiserror::Error;

use crate::hypergraph::Hyperedge;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count mismatch: {0} vs {1}")]
    VertexCountMismatch(u32, u32),

    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("duplicate hyperedge {{{0}}}")]
    DuplicateEdge(Hyperedge),

    #[error("{n} vertices exceeds the {max}-vertex limit")]
    TooManyVertices { n: u32, max: u32 },

    #[error("{n} qubits exceeds the {max}-qubit memory ceiling")]
    CapacityExceeded { n: u32, max: u32 },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: u32, found: u32 },

    #[error("table length {0} is not a power of two")]
    TableLength(usize),

    #[error("bipartition must be a nonempty proper subset of the vertices")]
    InvalidBipartition,

    #[error("permutation images must cover 1..=n exactly once")]
    NotAPermutation,

    #[error("census enumerates 1..=4 vertices, got {0}")]
    CensusRange(u32),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True when the error is a syntactic parse failure rather than a
    /// semantic validation failure. The CLI maps the former to exit code 1
    /// and the latter to exit code 2.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
