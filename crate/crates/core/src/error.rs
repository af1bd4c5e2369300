use thiserror::Error;

/// Failure to parse one of the text formats (partitions, tableaux, words).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid integer token {0:?}")]
    BadInteger(String),
    #[error("parts must be positive")]
    NonPositive,
    #[error("parts {0} are not weakly decreasing")]
    NotDecreasing(String),
    #[error("invalid tableau: {0}")]
    BadTableau(String),
    #[error("invalid word: {0}")]
    BadWord(String),
}

/// Error raised by the combinatorial and algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("shapes differ: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("supply exactly one of weight and max_entry")]
    WeightOrBound,
    #[error("word must be over the letters 1 and 2")]
    NotBinary,
    #[error("word must be nonempty")]
    EmptyWord,
    #[error("k-vector has {kv} entries but the word uses letter {letter}")]
    KVectorTooShort { kv: usize, letter: u32 },
    #[error("tuple is not weakly increasing in the tableau order")]
    Unsorted,
    #[error("residue {residue} out of range for modulus {modulus}")]
    Residue { residue: usize, modulus: usize },
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("number of copies must be at least 1")]
    NoCopies,
    #[error("tuple components have unequal shapes")]
    MixedShapes,
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
