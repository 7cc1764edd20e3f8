//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by exact-arithmetic, group, and enumeration routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A mathematically invalid request (bad parameters, division with
    /// remainder, non-integral result where an integer was required, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured resource limit (candidate cap, group-order cap, ...)
    /// was exceeded before the computation finished.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Mixed-conductor rows were passed to an operation that requires a
    /// single common conductor.
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),

    /// A computation terminated without certifying its result (for example
    /// a degree box that was exhausted before the series stabilised).
    #[error("incomplete result: {0}")]
    Incomplete(String),

    /// Malformed textual input (group names, CLI arguments).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
