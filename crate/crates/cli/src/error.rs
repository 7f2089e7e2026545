use std::path::PathBuf;

use thiserror::Error;

/// Process exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Error, Debug)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] bei_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("unknown theorem id {id:?} (known: {known})")]
    UnknownTheorem { id: String, known: String },
    #[error("unknown oracle check {0:?}")]
    UnknownCheck(String),
    #[error("invalid worker count {0:?}")]
    Workers(String),
}

pub type HarnessResult<T> = std::result::Result<T, HarnessError>;

impl HarnessError {
    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> HarnessError {
        let path = path.into();
        move |source| HarnessError::Io { path, source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Core(bei_core::Error::Budget(_)) => EXIT_BUDGET,
            // Disagreeing licci routes is a mathematical violation, not bad input.
            HarnessError::Core(bei_core::Error::RouteDisagreement(_)) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        }
    }
}
