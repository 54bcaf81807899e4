//! Wootters concurrence for arbitrary two-qubit states.
//!
//! The square roots of the eigenvalues of `ρ (σy⊗σy) ρ* (σy⊗σy)` are the
//! singular values of `B = Gᵀ (σy⊗σy) G` for any factor `ρ = G G†`. They are
//! read off the Hermitian dilation `[[0, B], [B†, 0]]`, whose spectrum is
//! `±σᵢ`, which avoids square roots of nearly-zero eigenvalues.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::oracle::eigen::{hermitian_eigen, hermitian_eigs};
use crate::scalar::Real;
use crate::state::{DensityMatrix, PauliBasis};

pub fn concurrence_wootters<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    let eig = hermitian_eigen(rho.matrix())?;
    let g = CMatrix::from_fn(4, |i, k| eig.vectors[(i, k)] * eig.values[k].max(T::zero()).sqrt());
    let yy = PauliBasis::new().pair(2, 2);
    let gt = CMatrix::from_fn(4, |i, j| g[(j, i)]);
    let b = &(&gt * &yy) * &g;
    let zero = Complex::new(T::zero(), T::zero());
    let dilation = CMatrix::from_fn(8, |i, j| match (i < 4, j < 4) {
        (true, false) => b[(i, j - 4)],
        (false, true) => b[(j, i - 4)].conj(),
        _ => zero,
    });
    let ev = hermitian_eigs(&dilation)?;
    // largest four are the singular values, descending from the end
    let s: Vec<T> = ev[4..].iter().rev().map(|v| v.max(T::zero())).collect();
    Ok(T::zero().max(s[0] - s[1] - s[2] - s[3]))
}
