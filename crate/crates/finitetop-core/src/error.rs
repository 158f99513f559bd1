//! Error type shared by every module.

use alloc::string::String;
use core::fmt;

/// What went wrong, at the granularity the CLI maps to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input value (unknown element, empty subset, malformed data).
    Domain,
    /// A stated precondition of an operation does not hold.
    Precondition,
    /// A size guard was exceeded.
    Resource,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Error {
    kind: ErrorKind,
    message: String,
}

impl Error {
    pub fn domain(message: impl Into<String>) -> Self {
        Error { kind: ErrorKind::Domain, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Error { kind: ErrorKind::Precondition, message: message.into() }
    }

    pub fn resource(message: impl Into<String>) -> Self {
        Error { kind: ErrorKind::Resource, message: message.into() }
    }

    pub fn kind(&self) -> ErrorKind {
        self.kind
    }

    pub fn message(&self) -> &str {
        &self.message
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            ErrorKind::Domain => "domain error",
            ErrorKind::Precondition => "precondition error",
            ErrorKind::Resource => "resource error",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
