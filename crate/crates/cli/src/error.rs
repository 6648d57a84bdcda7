use braidcurve_core::{BraidError, BranchError, ParseError};
use braidcurve_group::GroupError;
use braidcurve_monodromy::MonodromyError;
use thiserror::Error;

/// Failures of a command, each mapped to an exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed invocation or unusable input source (exit 2).
    #[error("{0}")]
    Usage(String),
    /// The input is well formed but the computation rejects it (exit 1).
    #[error("{0}")]
    Domain(String),
    /// A cap or budget ran out before an answer was reached (exit 3).
    #[error("{0}")]
    Exceeded(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Exceeded(_) => 3,
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<BranchError> for CliError {
    fn from(e: BranchError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::HomCapExceeded { .. } => CliError::Exceeded(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<MonodromyError> for CliError {
    fn from(e: MonodromyError) -> Self {
        if e.is_budget() {
            CliError::Exceeded(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Domain(format!("JSON: {e}"))
    }
}
