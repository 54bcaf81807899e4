use thiserror::Error;

/// Errors raised while building, validating or measuring states.
///
/// Magnitudes are reported as `f64` regardless of the scalar type in use.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported dimension {0}: expected 2, 4, 8 or 16")]
    InvalidDimension(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not Hermitian (max |a_ij - conj(a_ji)| = {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("trace is not one (|Tr - 1| = {deviation:e})")]
    TraceNotOne { deviation: f64 },
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },
    #[error("state is not X-shaped (largest off-X magnitude {max_off_x:e})")]
    NotXShape { max_off_x: f64 },
    #[error("X state is not symmetric (|rho32| = {rho32:e}, |rho41| = {rho41:e})")]
    NotSymmetricX { rho32: f64, rho41: f64 },
    #[error("invalid X-state entries: {0}")]
    InvalidXState(String),
    #[error("invalid qubit index set: {0}")]
    InvalidQubitSet(String),
    #[error("state support leaks outside the logical subspace (weight {leaked:e})")]
    SupportLeak { leaked: f64 },
    #[error("invalid logical basis: {0}")]
    InvalidBasis(String),
    #[error("state vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("parameter out of domain: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
