use thiserror::Error;

/// Errors produced by solvers, reductions, and instance operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid line: {0}")]
    InvalidLine(String),

    #[error("graph is not a star with this parameterization: {0}")]
    NotAStar(String),

    #[error("graph is not a tree: {0}")]
    NotATree(String),

    #[error("solver requires dfix = 0, instance has dfix = {0}")]
    NonzeroDfix(String),

    #[error("frequency bound {bound} is too small: {reason}")]
    BoundTooSmall { bound: u64, reason: String },

    #[error("solver requires fmin = fmax on every edge; edge {edge} has fmin {fmin}, fmax {fmax}")]
    UnequalBounds { edge: usize, fmin: u64, fmax: String },

    #[error("element sum {sum} is not divisible by {divisor}")]
    NotDivisible { sum: u64, divisor: u64 },

    #[error("invalid partition: {0}")]
    BadPartition(String),

    #[error("invalid solution: {0}")]
    InvalidSolution(String),

    #[error("encoding collision: {0}")]
    CollisionDetected(String),

    #[error("reduction hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("instance is not nice: {0}")]
    NotNice(String),

    #[error("factor parameters disagree: {0}")]
    ParameterMismatch(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("no feasible line concept exists")]
    Infeasible,

    #[error("time budget of {0:?} exhausted")]
    Timeout(std::time::Duration),

    #[error("input violates a precondition: {0}")]
    InfeasibleInput(String),

    #[error(transparent)]
    Parse(#[from] crate::io::ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
