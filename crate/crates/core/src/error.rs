//! Error type shared by all modules of the toolkit.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by exact computations.
///
/// Budget errors are not failures of mathematics but of patience: the exact
/// search or composition would exceed a configured cap, and the caller is
/// told so instead of silently receiving a truncated answer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("invalid lifting: {0}")]
    InvalidLifting(String),

    #[error("complexity budget exceeded: {what} > {limit}")]
    ComplexityBudgetExceeded { what: String, limit: usize },

    #[error("wrong degree: expected {expected}, found {found}")]
    WrongDegree { expected: i64, found: i64 },

    #[error("map has no fixed point")]
    NoFixedPoint,

    #[error("lifting is extensible (witness at n={n}, r={r}); refusing construction")]
    Extensible { n: u32, r: String },

    #[error("interval iteration did not stabilize within {budget} steps")]
    NonStabilizing { budget: usize },

    #[error("precision budget exceeded after {steps} steps (denominators too large)")]
    PrecisionBudgetExceeded { steps: usize },

    #[error("cover does not cover the circle (gap at {gap})")]
    CoverIncomplete { gap: String },

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    ParseError { line: usize, col: usize, msg: String },
}
