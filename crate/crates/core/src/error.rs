use thiserror::Error;

/// Errors produced while building graphs, decompositions, and running enumerations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid biclique: {0}")]
    InvalidBiclique(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("parts are not independent: edge ({0}, {1}) lies inside a part")]
    NotBipartite(usize, usize),

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("graph has {n} vertices, exceeding the limit of {limit} for exhaustive search")]
    TooLarge { n: usize, limit: usize },

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("algorithm `{0}` requires an OCT decomposition")]
    MissingDecomposition(&'static str),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
