use thiserror::Error;

/// What went wrong on a particular line of a `.hg` file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("vertex index {index} out of range for {n_vertices} vertices")]
    VertexOutOfRange { index: usize, n_vertices: usize },
    #[error("vertex {0} repeated within a hyperedge")]
    RepeatedVertex(usize),
    #[error("empty hyperedge")]
    EmptyHyperedge,
    #[error("missing `vertices <n>` header")]
    MissingHeader,
    #[error("vertex {0} lies in no hyperedge")]
    UncoveredVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("bad polynomial text: {0}")]
    BadPolynomial(String),
    #[error("hypergraph is not (d,r)-regular")]
    NotRegular,
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial has a nonzero odd-degree coefficient at degree {0}")]
    NotEven(usize),
    #[error("polynomial constant term must be 1")]
    ConstantTermNotOne,
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("prime-cycle enumeration exceeded its budget of {limit} steps")]
    EnumerationTooLarge { limit: u64 },
    #[error("expression undefined at u = {0}")]
    Undefined(String),
    #[error("{0:?} is not a clique of the graph")]
    NotAClique(Vec<usize>),
    #[error("not a simple graph: {0}")]
    NotAGraph(String),
    #[error("cross-check mismatch: {0}")]
    Mismatch(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
