use std::io;
use std::process::ExitCode;

use scheme_forge_core::Error as CoreError;

/// Failures of a command, split by the exit code they map to.
#[derive(Debug, thiserror::Error)]
pub enum ForgeError {
    /// Bad arguments: exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A computation or check failed: exit code 1.
    #[error("{0}")]
    Failed(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl ForgeError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            ForgeError::Usage(_) => ExitCode::from(2),
            _ => ExitCode::from(1),
        }
    }
}

impl ForgeError {
    /// Output went to a pipe that was closed early, as with `| head`.
    pub fn is_broken_pipe(&self) -> bool {
        let kind = match self {
            ForgeError::Io(e) => Some(e.kind()),
            ForgeError::Json(e) => e.io_error_kind(),
            ForgeError::Csv(e) => match e.kind() {
                csv::ErrorKind::Io(e) => Some(e.kind()),
                _ => None,
            },
            _ => None,
        };
        kind == Some(io::ErrorKind::BrokenPipe)
    }
}

impl From<CoreError> for ForgeError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::BadCharacteristic(_)
            | CoreError::BadOrder(_)
            | CoreError::BadModulusShape { .. }
            | CoreError::ReducibleModulus { .. }
            | CoreError::NoBuiltinModulus(_)
            | CoreError::InvalidGroup(_)
            | CoreError::TooLarge { .. } => ForgeError::Usage(e.to_string()),
            other => ForgeError::Failed(other.to_string()),
        }
    }
}

pub type Result<T, E = ForgeError> = std::result::Result<T, E>;
