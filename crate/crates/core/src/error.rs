//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MathError {
    #[error("invalid scalar: {0}")]
    InvalidScalar(String),
    #[error("arithmetic mixes quadratic fields Q(sqrt({0})) and Q(sqrt({1}))")]
    MixedQuadraticFields(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported space: {0}")]
    UnsupportedSpace(String),
    #[error("mode/scalar mismatch: {0}")]
    ModeMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("orbit closure exceeded cap of {0} elements")]
    OrbitCapExceeded(usize),
    #[error("search cap of {0} exceeded")]
    SearchCapExceeded(u64),
    #[error("root refinement failed to converge at index {0}")]
    ConvergenceFailure(usize),
    #[error("degenerate moment sequence: Hankel form is singular at degree {0}")]
    DegenerateMoments(usize),
    #[error("unknown catalog formula id {0:?}")]
    UnknownFormula(String),
    #[error("no fiber design supplied for subtorus dimension {0}")]
    MissingFiberDesign(usize),
    #[error("formula fails its degree-{0} claim; check aborted")]
    DegreeClaimFailed(usize),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
