use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("sigma is undefined for k = 0")]
    SigmaOfZero,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("interval [{lo}, {hi}] does not bracket a sign change")]
    NoSignChange { lo: String, hi: String },

    #[error("pole at x = {0}")]
    Pole(String),

    #[error("zero polynomial has no roots to isolate")]
    ZeroPolynomial,

    #[error("table depth {have} is insufficient, need {need}")]
    InsufficientDepth { have: usize, need: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
