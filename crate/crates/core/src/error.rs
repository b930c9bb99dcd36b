use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("operands live in different number fields")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("value out of range: {0}")]
    Range(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("point does not lie on the curve")]
    NotOnCurve,

    #[error("curves share a component through the point; intersection multiplicity is infinite")]
    InfiniteMultiplicity,

    #[error("specializations never agreed after {} draws: {draws:?}", draws.len())]
    GenericityFailure { draws: Vec<u64> },

    #[error("base point needs an extension of degree {degree}, above the limit {limit}")]
    SizeLimit { degree: usize, limit: usize },

    #[error("map is not birational: generic fibre has degree {degree}")]
    NotBirational { degree: usize },

    #[error("empty input: {0}")]
    Empty(String),

    #[error("document error: {0}")]
    Document(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
