use alloc::string::String;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An input violates an operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An exact search ran past its node budget.
    #[error("node budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    /// Numerically degenerate input, e.g. two identical polynomials.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// Two envelope candidates are closer than the tolerance at a sample point.
    #[error("tolerance too coarse: {0}")]
    Tolerance(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
