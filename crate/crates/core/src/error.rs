use thiserror::Error;

#[derive(Error, Debug)]
pub enum CoreError {
    #[error("matrix is not unimodular (det != 1)")]
    NotUnimodular,
    #[error("one-parameter exponents do not sum to zero")]
    ExponentsDoNotSumToZero,
    #[error("pole at t=0")]
    PoleAtZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension ceiling exceeded: requested {requested}, ceiling {ceiling}")]
    CeilingExceeded { requested: u32, ceiling: u32 },
    #[error("prime fields disagree: {0}")]
    PrimeDisagreement(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("no relation found at the declared multidegrees: {0}")]
    NoRelation(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}
