use thiserror::Error;

/// Errors produced by the library.
///
/// `Capacity`, `Domain`, and `DimensionMismatch` indicate bad inputs;
/// `Inconsistency` means two routes that must agree did not, which is a bug
/// either in this crate or in a formula it encodes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
