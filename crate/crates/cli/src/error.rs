use std::path::{Path, PathBuf};
use std::process::ExitCode;

use codediv_core::ErrorCategory;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] codediv_core::Error),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    /// 1 for invalid input, 2 for I/O failures, 3 for anything else.
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Core(e) => match e.category() {
                ErrorCategory::Validation => 1,
                ErrorCategory::Io => 2,
            },
            CliError::Config(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Internal(_) => 3,
        })
    }
}
