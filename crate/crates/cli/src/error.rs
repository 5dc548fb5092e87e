use std::path::PathBuf;

/// Exit status of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    /// Analysis completed and every asserted check passed.
    Success = 0,
    /// Analysis completed but a mathematical check failed.
    CheckFailed = 1,
    /// Input could not be read, parsed, or did not meet a precondition.
    BadInput = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn from_check(passed: bool) -> Self {
        if passed {
            ExitStatus::Success
        } else {
            ExitStatus::CheckFailed
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: invalid JSON: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    /// A field is missing or has the wrong shape.
    #[error("{path}: {field}: {message}")]
    Field { path: PathBuf, field: String, message: String },
    #[error("{context}: {source}")]
    Core { context: String, source: klein_core::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn core(context: impl Into<String>) -> impl FnOnce(klein_core::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Core { context, source }
    }
}

pub type CliResult<T> = Result<T, CliError>;
