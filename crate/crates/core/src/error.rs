//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Inner dimensions of a kernel do not agree.
    #[error("dimension mismatch in {op}: left is {lhs_rows}x{lhs_cols}, right is {rhs_rows}x{rhs_cols}")]
    DimensionMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// A matrix entry is NaN or infinite.
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    /// A parameter or configuration violates its contract.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Every column of an incoming Krylov block deflated before the basis
    /// reached the requested dimension.
    #[error(
        "Krylov collapse at iteration {iteration}: basis has {basis_dim} columns, {needed} required"
    )]
    KrylovCollapse {
        iteration: usize,
        basis_dim: usize,
        needed: usize,
    },

    /// A block that the alignment construction must invert is numerically
    /// singular.
    #[error("singular block: {0}")]
    Singular(String),

    /// Repeated singular values make the single-vector constant undefined.
    #[error("clustered spectrum: {0}")]
    ClusteredSpectrum(String),

    /// Malformed input file.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
