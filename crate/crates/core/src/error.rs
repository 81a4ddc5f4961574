use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid size n = {n}: {reason}")]
    InvalidSize { n: usize, reason: String },

    #[error("dimension mismatch: expected {expected} vertices, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid solution: {0}")]
    InvalidSolution(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// No pair of edge-disjoint solutions exists for this size.
    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("out of range: {0}")]
    Range(String),

    #[error("parse error: {0}")]
    Parse(String),
}
