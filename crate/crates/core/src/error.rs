use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph has {n} vertices, at most {max} supported")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("parse error: {0}")]
    Parse(String),

    #[error("alpha = {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("negative matrix entry at ({0}, {1})")]
    NegativeEntry(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("n = {n} is too small, need at least {min}")]
    TooSmall { n: usize, min: usize },
    #[error("multipartite graph has an empty part")]
    EmptyPart,
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("no root of the threshold equation in (1/2, 1) for n = {0}")]
    NoRootInInterval(usize),
    #[error("n = {n} exceeds the limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("enumeration of {kind} at n = {n} exceeds the cap of {cap}")]
    EnumerationCapExceeded { kind: String, n: usize, cap: usize },
    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),
}
