use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("oracle refuses graph on {n} vertices (cap {cap})")]
    OracleTooLarge { n: usize, cap: usize },

    #[error("vertex {0} is not dominated")]
    NotDominating(usize),

    #[error("edge ({0}, {1}) does not cross the bipartition")]
    InvalidBipartition(usize, usize),

    #[error("graph is not bipartite (odd cycle {0:?})")]
    NotBipartite(Vec<usize>),

    #[error("maximum degree {delta} is below the required {required}")]
    DegreeTooSmall { delta: usize, required: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
