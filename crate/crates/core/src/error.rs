use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational {0}")]
    InvalidRational(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// Weighted-sum scalarization cannot give polynomial approximation
    /// factors in more than one objective of a maximization problem, so the
    /// approximation algorithms refuse such instances outright.
    #[error(
        "maximization instances are not supported: weighted-sum optima of a \
         maximization problem may miss unsupported solutions by an arbitrarily \
         large factor in all but one objective"
    )]
    MaximizationUnsupported,

    #[error("target node {target} is unreachable from source node {origin}")]
    Unreachable { origin: usize, target: usize },

    #[error("graph is disconnected; no spanning tree exists")]
    Disconnected,

    #[error("enumeration exceeded the limit of {limit} feasible solutions")]
    EnumerationLimit { limit: usize },
}
