use crate::laurent::LaurentError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    DimensionMismatch { expected_rows: usize, expected_cols: usize, rows: usize, cols: usize },
    #[error("invalid partition {0:?}: {1}")]
    InvalidPartition(Vec<u32>, &'static str),
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau alphabet does not match the weight scheme")]
    AlphabetMismatch,
    #[error("weight scheme {scheme} does not apply to {kind} matrices")]
    SchemeKindMismatch { scheme: String, kind: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

pub type Result<T> = std::result::Result<T, Error>;
