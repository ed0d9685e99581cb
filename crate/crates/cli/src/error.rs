use thiserror::Error;

/// Failures surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] extremal_core::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown format {0:?} (expected json, csv or svg)")]
    UnknownFormat(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("bound violated: {0}")]
    BoundViolated(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// Process exit code: 2 bad input, 3 budget exhausted, 4 degenerate
    /// numeric input, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        use extremal_core::Error as E;
        match self {
            CliError::Core(E::Precondition(_)) => 2,
            CliError::Core(E::BudgetExceeded { .. }) => 3,
            CliError::Core(E::Degenerate(_) | E::Tolerance(_)) => 4,
            CliError::Parse(_) | CliError::UnknownFormat(_) | CliError::InsufficientData(_) => 2,
            CliError::Json(_) | CliError::Csv(_) => 2,
            CliError::BoundViolated(_) | CliError::Io(_) => 1,
        }
    }
}
