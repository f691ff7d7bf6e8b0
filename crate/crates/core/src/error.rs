use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("element is not invertible (det = 0)")]
    SingularElement,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("bad elementary index ({i}, {j}): need 1 <= i, j <= 3 and i != j")]
    BadIndex { i: usize, j: usize },
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("wrong algebra: expected {expected}, got {got}")]
    WrongAlgebra { expected: String, got: String },
    #[error("monomial space has {size} elements, above the cap of {cap}")]
    SizeOverflow { size: usize, cap: usize },
    #[error("no root branch reached tolerance {tolerance:e} (best residual {best:e})")]
    SolverFailure { tolerance: f64, best: f64 },
    #[error("the form is identically zero")]
    DegenerateForm,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
