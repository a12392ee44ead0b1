use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("inadmissible deformation b_{index}: {reason}")]
    InvalidDeformation { index: usize, reason: String },

    /// The candidate family is linearly dependent; `rank` < `size`.
    #[error("singular family: rank {rank} of {size} candidates")]
    Singular { rank: usize, size: usize },

    #[error("element does not lie in the span of the target family")]
    NotInSpan,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that signal a falsified mathematical claim rather than bad input.
    pub fn is_falsified_claim(&self) -> bool {
        matches!(self, Error::Singular { .. } | Error::NotInSpan)
    }
}
