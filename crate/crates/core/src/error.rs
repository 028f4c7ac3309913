use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{input}`: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("expression uses Q on P^{} but the ambient space is P^{}", .found - 1, .expected - 1)]
    AmbientMismatch { expected: usize, found: usize },

    #[error("unsupported decomposition: {0}")]
    Unsupported(String),

    #[error("parse error at token {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
