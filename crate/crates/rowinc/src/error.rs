//! Crate-wide error type.
//!
//! Four failure classes cover everything this library can reject:
//! malformed input, arguments outside a map's domain, an inexact
//! polynomial division (which always signals a transcription bug in a
//! closed form, never a recoverable condition), and integer overflow.
//! Arithmetic is exact everywhere; nothing wraps silently.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-contract input (parse failures, invalid
    /// tableaux, unsupported parameter combinations).
    #[error("input error: {0}")]
    Input(String),

    /// Structurally valid input outside the domain of the requested map.
    #[error("domain error: {0}")]
    Domain(String),

    /// A division that was expected to be exact left a remainder.
    #[error("divisibility error: {0}")]
    Divisibility(String),

    /// A coefficient or count no longer fits in 64 bits.
    #[error("overflow: {0}")]
    Overflow(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
