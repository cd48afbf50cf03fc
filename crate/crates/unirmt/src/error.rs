//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A dimension precondition failed (empty matrix, shape mismatch, ...).
    #[error("invalid dimension: {0}")]
    Dimension(String),

    /// An argument is outside its domain (NaN input, alpha outside (0,1), ...).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A matrix that must have full rank does not.
    #[error("rank deficient: detected rank {detected}, expected {expected}")]
    RankDeficient { detected: usize, expected: usize },

    /// Triangular factorization failed: the matrix is not positive definite.
    #[error("matrix not positive definite: {0}")]
    NotPositiveDefinite(String),

    /// An isometry condition (UᵀU = I or U₁ᵀU₂ = 0) is violated.
    #[error("orthogonality violation: {0}")]
    Orthogonality(String),

    /// Calibration parameters cannot be formed for these dimensions.
    #[error("calibration domain: {0}")]
    Calibration(String),

    /// The centering equation has no root in its bracket.
    #[error("no root in bracket: integral spans [{lo:.6e}, {hi:.6e}] vs target {target:.6e}")]
    NoRoot { lo: f64, hi: f64, target: f64 },

    /// The statistic saturated (largest squared canonical correlation is 1).
    #[error("statistic saturated: largest squared canonical correlation equals 1")]
    Saturated,

    /// An iterative numerical routine failed to converge.
    #[error("numerical routine did not converge: {0}")]
    NonConvergence(String),

    /// Invalid simulation or CLI configuration.
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed CSV or numeric text input.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
