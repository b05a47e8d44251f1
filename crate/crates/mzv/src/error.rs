//! Crate-wide error type.

use std::fmt;

/// Errors produced by parsing, algebra, and evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed text input (word, composition, or polynomial syntax).
    Parse(String),
    /// Evaluation of a divergent series was requested: the leading exponent
    /// of the composition is 1.
    Divergent(String),
    /// A word outside `Q + H·y` cannot be decoded into a composition.
    NotZDecodable(String),
    /// Parameters outside an operation's documented range (e.g. `n > N`,
    /// cutoff below depth, precision below 10 digits).
    InvalidParameters(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Divergent(what) => {
                write!(f, "divergent: k1 must be \u{2265} 2 (got {what})")
            }
            Error::NotZDecodable(word) => {
                write!(f, "word `{word}` ends in x and has no z-factorization")
            }
            Error::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
