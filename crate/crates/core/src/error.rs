//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate letter {0:?} in alphabet")]
    DuplicateLetter(String),

    #[error("empty letter name in alphabet")]
    EmptyLetter,

    #[error("alphabets differ: {0:?} vs {1:?}")]
    AlphabetMismatch(String, String),

    #[error("unknown letter {letter:?} at position {position}")]
    UnknownLetter { letter: char, position: usize },

    #[error("graph has no basepoint")]
    MissingBasepoint,

    #[error("vertex {0} out of range")]
    InvalidVertex(u32),

    #[error("graph is not folded")]
    NotFolded,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph validation failed: {0}")]
    Corrupt(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("element budget of {0} exceeded while closing the quotient group")]
    BudgetExceeded(usize),

    #[error("quotient orders {0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("not a subgroup of the given supergroup")]
    NotASubgroup,

    #[error("modulus must be nonzero")]
    ZeroModulus,

    #[error("search needs at least one trial")]
    NoTrials,

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cannot serialize: {0}")]
    Serialize(String),
}
