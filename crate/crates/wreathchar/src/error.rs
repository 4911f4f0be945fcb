use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A shape and a weight (or class) disagree in size.
    #[error("size mismatch: {context}: {left} != {right}")]
    SizeMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },

    /// A literal failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// An argument violated a precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// `sign_r` was asked for a partition without an empty r-core.
    #[error("sign_{r} is undefined for {shape}: the {r}-core is not empty")]
    NonEmptyCore { shape: String, r: usize },

    /// A character evaluation outside the model's supported domain.
    #[error("unsupported evaluation: {0}")]
    UnsupportedEvaluation(String),
}
