use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Dimension/length mismatch between operands.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A precondition on argument values was violated.
    #[error("invalid argument: {0}")]
    Invalid(String),

    /// A candidate solution consisting only of infinities.
    #[error("candidate solution is all-infinite")]
    AllInfinite,

    /// A vector required to be a solution is not one.
    #[error("not a solution: {0}")]
    NotASolution(String),

    /// An exhaustive scan would exceed its evaluation budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// An internal contract failed; indicates a bug, not bad input.
    #[error("internal contract violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
