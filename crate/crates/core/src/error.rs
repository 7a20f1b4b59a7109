use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Malformed predicate expression; `offset` is a byte offset.
    #[error("at offset {offset}: {message}")]
    Expression { offset: usize, message: String },

    #[error("{0}")]
    Domain(String),

    #[error("insertion order violated: {0}")]
    Contract(String),

    #[error("brute-force bound exceeded: smaller side has {size} elements, bound is {bound}")]
    Capacity { size: usize, bound: usize },

    #[error("integrity violation: {0}")]
    Integrity(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
