use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    /// Rejected by the argument parser, or a help/version request.
    #[error("{0}")]
    Cli(#[from] clap::Error),
    /// A flag value that does not parse or does not fit the other flags.
    #[error("invalid value for {flag}: {message}")]
    Usage { flag: &'static str, message: String },
    #[error("{0}")]
    Domain(hecke_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{context}: {source}")]
    Json { context: String, source: serde_json::Error },
    #[error("malformed {what}: {message}")]
    Schema { what: &'static str, message: String },
}

impl LabError {
    pub fn usage(flag: &'static str, message: impl Into<String>) -> Self {
        LabError::Usage { flag, message: message.into() }
    }

    pub fn schema(what: &'static str, message: impl Into<String>) -> Self {
        LabError::Schema { what, message: message.into() }
    }

    /// `2` for usage errors (including size guards), `1` for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Cli(e) => e.exit_code(),
            LabError::Usage { .. } | LabError::Domain(hecke_core::Error::BudgetExceeded { .. }) => 2,
            _ => 1,
        }
    }
}

impl From<hecke_core::Error> for LabError {
    fn from(e: hecke_core::Error) -> Self {
        LabError::Domain(e)
    }
}

pub type Result<T, E = LabError> = std::result::Result<T, E>;
