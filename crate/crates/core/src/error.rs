use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid field `{field}`: {msg}")]
    Schema { field: String, msg: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("linear form is not admissible: constraint ({i}, {j}) violated")]
    Inadmissible { i: usize, j: usize },

    #[error("{0}")]
    Algebra(String),
}

pub type Result<T> = std::result::Result<T, Error>;
