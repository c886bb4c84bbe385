//! Error taxonomy shared across the crate.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    /// Input outside the mathematical domain of the operation (poles,
    /// nonpositive arguments of logarithms, excluded parameter values).
    #[error("domain error: {0}")]
    Domain(String),

    /// Operation invoked on data that violates its contract (wrong kernel
    /// family, missing singular term, dimension mismatch).
    #[error("contract error: {0}")]
    Contract(String),

    /// Evaluation requested outside the validity region of a series or
    /// expansion.
    #[error("range error: {0}")]
    Range(String),

    /// A numeric stage failed to reach its tolerance (inconsistent linear
    /// system, quadrature non-convergence).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Configuration file or CLI argument problem.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
