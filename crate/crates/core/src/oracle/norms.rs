use crate::error::Result;
use crate::matrix::CMatrix;
use crate::oracle::eigen::hermitian_eigs;
use crate::scalar::Real;

/// `‖A‖₁ = Σ |λᵢ|` for Hermitian `A`.
pub fn trace_norm<T: Real>(a: &CMatrix<T>) -> Result<T> {
    Ok(hermitian_eigs(a)?.into_iter().map(T::abs).sum())
}

/// `‖A‖₂² = Tr(A†A)`.
pub fn hs_norm_sq<T: Real>(a: &CMatrix<T>) -> T {
    a.fro_norm_sq()
}
