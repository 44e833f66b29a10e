use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not implemented: {0}")]
    NotImplemented(String),
    #[error("index clash at {0}: the leading wedge would repeat an index")]
    IndexClash(i64),
}

pub type Result<T> = std::result::Result<T, FockError>;
