use thiserror::Error;

use crate::graph::VertexSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: bad ids, self-loops, unparsable text.
    #[error("input error{}: {message}", line.map(|l| format!(" (line {l})")).unwrap_or_default())]
    Input {
        line: Option<usize>,
        message: String,
    },

    /// An operation was called outside its domain (e.g. a non-chordal graph
    /// handed to clique enumeration).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural property that the theory guarantees did not hold.
    /// Seeing this means a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// An exponential search refused to run on an instance above its size limit.
    #[error("refusing {what}: size {actual} exceeds limit {limit}")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("could not build a clique path tree at separator {separator:?}")]
    Realization { separator: Option<VertexSet> },

    #[error("generation failed: {0}")]
    Generation(String),
}

impl Error {
    pub(crate) fn input(message: impl Into<String>) -> Self {
        Error::Input {
            line: None,
            message: message.into(),
        }
    }

    pub(crate) fn input_at(line: usize, message: impl Into<String>) -> Self {
        Error::Input {
            line: Some(line),
            message: message.into(),
        }
    }
}
