//! CLI-level error with exit-code mapping.

use std::fmt;

use finitetop_core::{Error as CoreError, ErrorKind};

#[derive(Debug)]
pub enum AppError {
    Core(CoreError),
    /// File and format problems; treated like domain errors.
    Io(String),
}

impl AppError {
    pub fn io(message: String) -> Self {
        AppError::Io(message)
    }

    /// 2 for bad input, 3 for size-guard rejections.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(e) if e.kind() == ErrorKind::Resource => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Core(e) => write!(f, "{e}"),
            AppError::Io(m) => write!(f, "input error: {m}"),
        }
    }
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        AppError::Core(e)
    }
}

pub type AppResult<T> = Result<T, AppError>;
