//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the imputation engine, combiners and the simulation
/// harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A design matrix is numerically rank deficient. Carries the numerical
    /// rank detected before the offending pivot and the pivot value itself.
    #[error("rank-deficient design: numerical rank {numerical_rank} (pivot {pivot:.3e} below tolerance {tolerance:.3e})")]
    RankDeficient {
        numerical_rank: usize,
        pivot: f64,
        tolerance: f64,
    },

    /// A Gram matrix required to be nonsingular could not be factorized.
    #[error("singular matrix in {context}")]
    Singular { context: &'static str },

    /// Too few respondents for the requested model.
    #[error("need more than p + 2 = {} respondents, got {r}", p + 2)]
    TooFewRespondents { r: usize, p: usize },

    /// Mismatched dimensions between two arguments.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// Respondent index set is not a valid subset of the design rows.
    #[error("invalid respondent set: {reason}")]
    InvalidRespondents { reason: String },

    /// A unit index passed to a covariance oracle does not match its claimed
    /// observed/missing classification.
    #[error("invalid unit index {index}: {reason}")]
    InvalidIndex { index: usize, reason: &'static str },

    /// Posterior for the residual variance is degenerate (zero residual
    /// variance with a zero prior scale).
    #[error("degenerate posterior for the residual variance: residual variance and prior scale are both zero")]
    DegeneratePosterior,

    /// Invalid prior hyperparameters.
    #[error("invalid prior: {reason}")]
    InvalidPrior { reason: String },

    /// A scalar argument is outside its admissible range.
    #[error("invalid argument {name}: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    /// Asymmetric or indefinite quadratic-form coefficient matrix.
    #[error("invalid quadratic-form matrix: {reason}")]
    InvalidQuadraticForm { reason: String },

    /// A simulation replicate failed; carries enough provenance to reproduce
    /// the failing draw.
    #[error("replicate {replicate} of cell n={n}, r={r} failed (seed path {seed_path}): {source}")]
    Replicate {
        replicate: usize,
        n: usize,
        r: usize,
        seed_path: String,
        #[source]
        source: Box<Error>,
    },

    /// Bad simulation configuration.
    #[error("configuration error: {reason}")]
    Config { reason: String },

    /// I/O error while reading input data or writing result tables.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed CSV input.
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
