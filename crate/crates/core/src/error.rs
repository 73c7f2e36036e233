use num_bigint::BigInt;
use thiserror::Error;

use crate::presentation::Move;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("determinant is {det}, expected 1")]
    Determinant { det: BigInt },

    #[error("gcd({a}, {c}) is not 1")]
    Gcd { a: BigInt, c: BigInt },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero while evaluating a continued fraction")]
    DivisionByZero,

    #[error("move {mv:?} does not apply to this word")]
    InvalidMove { mv: Move },

    #[error("word is not a staircase word: {0}")]
    NotStaircase(String),

    #[error("word is not proper: {0}")]
    NotProper(String),

    #[error("search budget of {max_nodes} nodes exceeded at length {level}")]
    BudgetExceeded { max_nodes: usize, level: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
