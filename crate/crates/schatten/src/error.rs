//! Error type shared by the whole toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Matrix shapes are incompatible for the requested operation.
    #[error("dimension mismatch in {op}: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimensionMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    /// An input value violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A supposed permutation or pairing is not a bijection on {{0..n-1}}.
    #[error("not a bijection: {0}")]
    NotBijective(String),

    /// A singular spectrum failed validation (sorted non-increasing, non-negative, finite).
    #[error("invalid spectrum at index {index}: {detail}")]
    InvalidSpectrum { index: usize, detail: String },

    /// The Jacobi sweep cap was exceeded without meeting the convergence criterion.
    #[error("singular value iteration did not converge within {max_sweeps} sweeps")]
    SvdDidNotConverge { max_sweeps: usize },

    /// The product-inequality checker refuses spectra beyond its quadratic-cost cap.
    #[error("spectrum of length {len} exceeds the product-inequality check cap of {cap}")]
    SpectrumTooLong { len: usize, cap: usize },

    /// A Hölder ratio is undefined because one factor has zero norm.
    #[error("degenerate pair: at least one factor has zero quasi-norm, ratio undefined")]
    DegeneratePair,

    /// Malformed input file or JSON document.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
