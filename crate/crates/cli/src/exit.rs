use std::path::PathBuf;
use std::process::ExitCode;

use nmrsim_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),

    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Regression(String),
}

pub const OK: u8 = 0;
pub const USAGE: u8 = 1;
pub const REGRESSION: u8 = 2;
pub const VALIDATION: u8 = 3;
pub const DIMENSION: u8 = 4;

fn core_code(e: &Error) -> u8 {
    match e {
        Error::Validation { source, .. } => core_code(source),
        Error::Malformed(_)
        | Error::EmptyHistory
        | Error::IncompleteSet(_)
        | Error::InvalidLabel(_)
        | Error::IndexOutOfRange { .. }
        | Error::ZeroRepetitions
        | Error::ZeroShots => USAGE,
        Error::NotSquare { .. }
        | Error::DimNotPowerOfTwo(_)
        | Error::DimMismatch { .. }
        | Error::WrongDim { .. }
        | Error::WrongLength { .. }
        | Error::TooManyQubits(_) => DIMENSION,
        _ => VALIDATION,
    }
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Core(e) => core_code(e),
            CliError::Read { .. } | CliError::Write { .. } | CliError::Usage(_) => USAGE,
            CliError::Regression(_) => REGRESSION,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code())
    }
}
