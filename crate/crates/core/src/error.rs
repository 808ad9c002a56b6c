use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid class: {0}")]
    InvalidClass(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid vertex set: {0}")]
    InvalidSet(String),
    #[error("X and Y are adjacent; no separator exists")]
    Adjacent,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
