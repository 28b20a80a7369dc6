use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Failure categories shared by every module.
///
/// The command line maps `Config`, `Usage` and `Unsupported` to exit code 2
/// and `Accuracy` / `Numeric` to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rule, profile or distribution parameter is out of range.
    Config(String),
    /// The caller combined valid objects in an invalid way (dimension
    /// mismatch, zero samples, budget exceeded, ...).
    Usage(String),
    /// The requested method does not support the given inputs.
    Unsupported(String),
    /// The requested numerical resolution cannot deliver a meaningful answer.
    Accuracy(String),
    /// A computation produced a non-finite or otherwise invalid number.
    Numeric(String),
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub fn accuracy(msg: impl Into<String>) -> Self {
        Error::Accuracy(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Config(m) => write!(f, "configuration error: {m}"),
            Error::Usage(m) => write!(f, "usage error: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::Accuracy(m) => write!(f, "accuracy error: {m}"),
            Error::Numeric(m) => write!(f, "numeric failure: {m}"),
        }
    }
}

impl core::error::Error for Error {}
