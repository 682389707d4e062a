use thiserror::Error;

use crate::exactnum::NumError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("subspace is not graded")]
    NotGraded,
    #[error("not an ideal: [{left}, {right}] leaves the subspace")]
    NotAnIdeal { left: String, right: String },
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("not a Cartan subalgebra: {0}")]
    NotCartan(String),
    #[error("not compactly embedded: {0}")]
    NotCompactlyEmbedded(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("functional is not in the admissible cone: {0}")]
    NotAdmissible(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no codimension-one ideal flag: {0}")]
    FlagFailure(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
}

impl Error {
    /// `2` when a computed result failed its own re-verification, `1` for
    /// everything the input is responsible for (including unmet preconditions).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invariant(_) | Error::Num(NumError::DivisionByZero) => 2,
            _ => 1,
        }
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Num(NumError::FieldMismatch(_)) => "FIELD_MISMATCH",
            Error::Num(NumError::DivisionByZero) => "DIVISION_BY_ZERO",
            Error::Num(NumError::Parse(_)) => "PARSE_ERROR",
            Error::Num(NumError::SplittingFailure(_)) => "SPLITTING_FAILURE",
            Error::InvalidInput(_) => "INVALID_INPUT",
            Error::NotGraded => "NOT_GRADED",
            Error::NotAnIdeal { .. } => "NOT_AN_IDEAL",
            Error::NotSubalgebra(_) => "NOT_A_SUBALGEBRA",
            Error::NotNilpotent => "NOT_NILPOTENT",
            Error::NotCartan(_) => "NOT_CARTAN",
            Error::NotCompactlyEmbedded(_) => "NOT_COMPACTLY_EMBEDDED",
            Error::SearchExhausted(_) => "SEARCH_EXHAUSTED",
            Error::NotAdmissible(_) => "NOT_ADMISSIBLE",
            Error::FlagFailure(_) => "FLAG_FAILURE",
            Error::Precondition(_) => "PRECONDITION_FAILED",
            Error::Invariant(_) => "INVARIANT_VIOLATION",
            Error::UnknownCatalog(_) => "UNKNOWN_CATALOG_ENTRY",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
