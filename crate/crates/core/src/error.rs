use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` has no assigned value")]
    MissingVariable(String),

    #[error("cannot parse rational from `{0}`")]
    ParseRational(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),

    #[error("polynomial has degree {0}, expected at most {1}")]
    DegreeTooHigh(u32, u32),

    #[error("invalid partition data: {0}")]
    InvalidPartition(String),

    #[error("insufficient or degenerate samples: {0}")]
    DegenerateSamples(String),

    #[error("samples do not share boundary traces: {0}")]
    MixedBoundaryTraces(String),

    #[error("all-zero projective point")]
    ZeroPoint,

    #[error("eigenvalue {0} is not allowed (must avoid 0, 1 and -1)")]
    BadEigenvalue(String),

    #[error("matrix {index} is not on the closure of its conjugacy class: {reason}")]
    NotInClosure { index: usize, reason: String },

    #[error("point {0} does not lie on the closure of the class")]
    NotOnQuadric(String),

    #[error("trace condition fails: Tr(A_1...A_(n-1)) = {lhs} but k_n e_1...e_(n-1) = {rhs}")]
    TraceCondition { lhs: String, rhs: String },

    #[error("undefined * product (all-zero)")]
    UndefinedStarProduct,

    #[error("point violates the chart: {0}")]
    ChartViolation(String),

    #[error("indeterminate limit: {0}")]
    IndeterminateLimit(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
