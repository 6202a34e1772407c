use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at specialization: denominator factor `{denominator}` vanishes")]
    Pole { denominator: String },

    #[error("quantum binomial [{k} choose {l}] is undefined (need 0 <= l <= k)")]
    InvalidBinomial { k: i64, l: i64 },

    #[error("weight symbol index {0} exceeds the supported maximum of {max}", max = crate::qfield::MAX_SYMBOLS)]
    TooManySymbols(usize),

    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("missing block for degree {0}")]
    MissingBlock(i64),

    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("extended projector needs at least two weights, got {0}")]
    TooFewWeights(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
