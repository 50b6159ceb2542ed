use thiserror::Error;

/// Errors raised by polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different variable lists")]
    VariableMismatch,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("grading weights must be positive")]
    NonPositiveWeight,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
}

/// A syntax or validation error in the text format, with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("modules live over different rings")]
    RingMismatch,
    #[error("rank needs a domain; declare `assume_domain = true;` in the ring")]
    DomainRequired,
    #[error("minimalization needs a graded presentation or a ring through the origin: {0}")]
    NotLocal(String),
    #[error("map is not well defined: source relation {relation} does not map into the target relations")]
    NotWellDefined { relation: usize },
    #[error("invalid symmetric derivation: {0}")]
    InvalidDerivation(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
