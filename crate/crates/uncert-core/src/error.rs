use thiserror::Error;

/// Errors raised by state construction and the uncertainty operations.
///
/// Every validation variant carries the measured residual so callers can see
/// how far an input was from satisfying the violated invariant.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |m_ij - conj(m_ji)| = {residual:e} exceeds {tol:e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("trace is not 1: |trace - 1| = {residual:e} exceeds {tol:e}")]
    TraceNotOne { residual: f64, tol: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:e} < -{tol:e}")]
    NotPsd { min_eigenvalue: f64, tol: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("observable list is empty")]
    EmptyObservableList,

    #[error("Bloch vector norm {norm} exceeds 1")]
    BlochNormExceeded { norm: f64 },

    #[error("direction vector has norm {norm}, expected a unit vector")]
    NotUnitVector { norm: f64 },

    #[error("directions are not orthogonal: |a.b| = {dot:e}")]
    NotOrthogonal { dot: f64 },

    #[error("{name} = {value} lies outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("omega = {omega} lies outside [0, 1]")]
    InvalidOmega { omega: f64 },

    #[error("appended-level state requires a unit mean-spin vector: |r| = {norm}")]
    NotUnitBloch { norm: f64 },

    #[error("invalid level pair ({i}, {j}): indices must satisfy 1 <= i < j <= 3")]
    InvalidPair { i: usize, j: usize },

    #[error("invalid axis index {axis}: must be 1, 2 or 3")]
    InvalidAxis { axis: usize },

    #[error("invalid populations ({p1}, {p2}, {p3}): {reason}")]
    InvalidPopulations {
        p1: f64,
        p2: f64,
        p3: f64,
        reason: &'static str,
    },

    #[error("state is not permutation symmetric: max |SWAP.rho.SWAP - rho| = {residual:e}")]
    NotSymmetricState { residual: f64 },

    #[error("eigenvalue computation failed: residual {residual:e} exceeds its bound")]
    EigenFailure { residual: f64 },

    #[error("matrix is not an X state: off-pattern entry at ({row}, {col}) has modulus {value:e}")]
    NotXState {
        row: usize,
        col: usize,
        value: f64,
    },

    #[error("invalid separable ensemble: {reason}")]
    InvalidEnsemble { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
