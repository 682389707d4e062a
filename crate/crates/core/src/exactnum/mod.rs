//! Exact arithmetic: the scalar tower and univariate polynomials.

mod poly;
mod scalar;

pub use poly::{split_rational, Poly, Splitting};
pub use scalar::{is_squarefree_u32, FieldTag, Rat, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumError {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("splitting failure: {0}")]
    SplittingFailure(String),
}
