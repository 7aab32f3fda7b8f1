use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("not a permutation of 1..{0}")]
    InvalidPermutation(usize),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("transposition needs two distinct indices, got ({0} {0})")]
    DegenerateTransposition(usize),

    #[error("cycle repeats index {0}")]
    RepeatedIndex(usize),

    #[error("order keys have different lengths ({0} vs {1})")]
    KeyLengthMismatch(usize, usize),

    #[error("clique size k = {k} must satisfy 2 <= k <= p = {p}")]
    InvalidCliqueSize { k: usize, p: usize },

    #[error("{what}: {requested} exceeds the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u128,
        cap: u128,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
