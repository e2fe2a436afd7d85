use crate::word::ParseWordError;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("letters at positions {index} and {} are equal", index + 1)]
    AdjacentRepeat { index: usize },

    #[error("word of length {len} is too short; at least {min} letters are needed")]
    TooShort { len: usize, min: usize },

    #[error("{0} is not circular square-free")]
    NotCircularSquareFree(String),

    #[error("the empty word is not allowed here")]
    EmptyWord,

    #[error("no level ternary circular square-free word of length {0} exists (excluded lengths: 5, 7, 9, 10, 14, 17)")]
    NoSuchLength(usize),

    #[error("length {n} is outside the supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },

    #[error("length {n} is below the minimum of {min}")]
    TooSmall { n: usize, min: usize },

    #[error("length {n} exceeds the brute-force cap of {cap}")]
    CapacityExceeded { n: usize, cap: usize },

    #[error("no linking word with |f(s)| = {0} is available")]
    NoLinkingWord(usize),

    #[error("construction for length {n} failed verification: {reason}")]
    VerificationFailed { n: usize, reason: String },

    #[error("line {line}: {reason}")]
    Table { line: usize, reason: String },

    #[error(transparent)]
    Parse(#[from] ParseWordError),
}

pub type Result<T> = std::result::Result<T, Error>;
