//! Command failures and their process exit codes.

use ringlab_core::{ConstructError, RingError, SourceError, StructureError, VerifyError};
use thiserror::Error;

pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_DISAGREEMENT: u8 = 4;
pub const EXIT_IO: u8 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid ring: {0}")]
    Validation(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("{0} suite(s) disagree")]
    Disagreement(usize),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) | CliError::Usage(_) => EXIT_VALIDATION,
            CliError::Cap(_) => EXIT_CAP,
            CliError::Disagreement(_) => EXIT_DISAGREEMENT,
            CliError::Io(_) => EXIT_IO,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<SourceError> for CliError {
    fn from(e: SourceError) -> Self {
        match &e {
            _ if e.is_cap() => CliError::Cap(e.to_string()),
            SourceError::Io { .. } => CliError::Io(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<StructureError> for CliError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::LatticeCapExceeded { .. }
            | StructureError::IdealCountExceeded { .. } => CliError::Cap(e.to_string()),
            StructureError::NotProperIdeal => CliError::Validation(e.to_string()),
            StructureError::InternalInvariantViolation(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        SourceError::from(e).into()
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        SourceError::from(e).into()
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Usage(e.to_string())
    }
}
