use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid partition: part at index {index} ({value}) exceeds the preceding part ({previous})")]
    NotDecreasing {
        index: usize,
        value: u32,
        previous: u32,
    },

    #[error("invalid border sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid hook removal: {0}")]
    InvalidRemoval(String),

    #[error("invalid tableau type: {0}")]
    InvalidType(String),

    #[error("invalid core: {0}")]
    InvalidCore(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
