use thiserror::Error;

/// Errors raised by curvkit operations.
///
/// Witnesses are carried as rendered strings so that the error type stays
/// independent of the scalar field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation failed ({invariant}): {witness}")]
    Validation { invariant: String, witness: String },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is degenerate (determinant is zero)")]
    DegenerateMetric,
    #[error("endomorphism is not skew with respect to the metric")]
    NotSkew,
    #[error("endomorphism is not an isometry of the metric")]
    NotIsometry,
    #[error("polynomial is not squarefree")]
    NonSquarefreeInput,
    #[error("the zero polynomial has no well-defined root count")]
    ZeroPolynomial,
    #[error("interval is empty")]
    InvalidInterval,
    #[error("lie closure did not stabilise after {rounds} rounds")]
    IterationCap { rounds: usize },
    #[error("curvature tensor is not semi-symmetric: {witness}")]
    NotSemisymmetric { witness: String },
    #[error("ricci minimal polynomial factor {factor} has multiplicity {multiplicity}")]
    FactorMultiplicityViolation { factor: String, multiplicity: usize },
    #[error("space is not lorentzian (signature ({positive},{negative}))")]
    NotLorentzian { positive: usize, negative: usize },
    #[error("invalid generator spec: {0}")]
    SpecInvalid(String),
    #[error("no non-semi-symmetric perturbation found after {retries} retries")]
    GaveUp { retries: usize },
    #[error("dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("internal invariant breached: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
