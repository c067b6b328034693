//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported bound 2^31")]
    ModulusTooLarge(u64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("points are not pairwise distinct")]
    DuplicatePoint,
    #[error("projectivity matrix is singular")]
    SingularProjectivity,
    #[error("point set spans a single point; no positive-dimensional span")]
    DegenerateSpan,
    #[error("point set is empty")]
    EmptySet,
    #[error("point does not lie in the subspace")]
    PointOutsideSubspace,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CbError {
    #[error("degree k must satisfy k >= 1")]
    DegreeOutOfRange,
    #[error("expected level is not positive: k={k}, removed={removed}")]
    LevelUnderflow { k: usize, removed: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("field too small for the requested configuration: {0}")]
    FieldTooSmall(String),
    #[error("invalid generator parameters: {0}")]
    BadParameters(String),
    #[error("attempt budget of {budget} draws exhausted for {what}")]
    BudgetExhausted { budget: usize, what: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("point span has projective dimension {got}, expected {expected}")]
    SpanDimension { expected: usize, got: usize },
    #[error("component menu inconsistent with degree budget: {0}")]
    BadMenu(String),
    #[error("rational normal curve frame is singular: first n+2 points are not in general position")]
    SingularFrame,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AuditError {
    #[error("parameter out of range: {0}")]
    BadParameters(String),
    #[error("instance failed Cayley-Bacharach certification at k={k}; statement audits require a certified instance")]
    CertificationFailed { k: usize },
    #[error(transparent)]
    Cb(#[from] CbError),
    #[error(transparent)]
    Gen(#[from] GenError),
}
