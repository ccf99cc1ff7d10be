use thiserror::Error;

/// A syntax error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Domain(#[from] hahn_core::Error),
    #[error("{0}")]
    Undefined(String),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// 1 for domain errors, 2 for parse and usage errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Undefined(_) => 1,
            Error::Parse(_) | Error::Usage(_) => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
