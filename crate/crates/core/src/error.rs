use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable tables differ: {0} vs {1}")]
    VarTableMismatch(String, String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("denominator is zero")]
    ZeroDenominator,

    #[error("exact division failed: divisor does not divide dividend")]
    InexactDivision,

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("substitution into negative power of `{0}` requires a monomial value")]
    NonInvertibleSubstitution(String),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i32>),

    #[error("degenerate parameter: {0}")]
    Degenerate(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
