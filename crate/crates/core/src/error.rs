use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is numerically singular (reciprocal condition {rcond:.3e})")]
    Singular { rcond: f64 },
    #[error("matrix is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    #[error("matrix is not positive definite (smallest eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveDefinite { min_eigenvalue: f64 },
    #[error("matrix is not accretive (smallest eigenvalue of the real part {margin:.3e})")]
    NotAccretive { margin: f64 },
    #[error("spectrum touches the closed negative real axis (eigenvalue {re:.3e}{im:+.3e}i)")]
    BranchCut { re: f64, im: f64 },
    #[error("eigenvector basis is ill-conditioned (condition number {condition:.3e})")]
    IllConditionedEigenbasis { condition: f64 },
    #[error("Schur decomposition did not converge")]
    NoConvergence,
    #[error("sector angle {0} is outside [0, pi/2)")]
    InvalidAngle(f64),
    #[error("mean order {0} is outside (-1, 0) u (0, 1) u (1, 2) and is not an endpoint 0 or 1")]
    InvalidOrder(f64),
    #[error("quadrature rule needs at least 4 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("quadrature rule was built for r = {rule}, requested r = {requested}")]
    RuleMismatch { rule: f64, requested: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
