use thiserror::Error;

/// Errors raised by constructions and checks.
///
/// Mathematical failures of a check are reported through report values, not
/// through this type. An `Error` means the request itself could not be served.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {requested} is out of range (available up to {available})")]
    DimensionOutOfRange { requested: usize, available: usize },
    #[error("horn index {k} is invalid for dimension {n}")]
    BadHornIndex { n: usize, k: usize },
    #[error("not coskeletal: {0}")]
    NotCoskeletal(String),
    #[error("not a Kan complex: {0}")]
    NotKan(String),
    #[error("not a sub-simplicial set: {0}")]
    NotSubcomplex(String),
    #[error("not a groupoid: {0}")]
    NotGroupoid(String),
    #[error("not a 1-Kan groupoid: {0}")]
    NotOneKanGroupoid(String),
    #[error("not a 2-Kan groupoid: {0}")]
    NotTwoKanGroupoid(String),
    #[error("not a 2-group: {0}")]
    NotTwoGroup(String),
    #[error("not reduced: {0}")]
    NotReduced(String),
    #[error("search budget of {0} candidate evaluations exceeded")]
    BudgetExceeded(u64),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
