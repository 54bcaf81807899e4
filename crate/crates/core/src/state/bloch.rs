//! Bloch (Pauli-basis) representation of two-qubit states:
//! `ρ = ¼(I⊗I + Σ xᵢ σᵢ⊗I + Σ yᵢ I⊗σᵢ + Σ Γᵢⱼ σᵢ⊗σⱼ)`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::Real;
use crate::state::density::DensityMatrix;
use crate::state::pauli::PauliBasis;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochForm<T> {
    /// Local Bloch vector of qubit A.
    pub x: [T; 3],
    /// Local Bloch vector of qubit B.
    pub y: [T; 3],
    /// Correlation matrix `Γᵢⱼ = Tr ρ(σᵢ⊗σⱼ)`.
    pub gamma: [[T; 3]; 3],
}

impl<T: Real> BlochForm<T> {
    pub fn zero() -> Self {
        Self { x: [T::zero(); 3], y: [T::zero(); 3], gamma: [[T::zero(); 3]; 3] }
    }

    /// `K = x xᵀ + Γ Γᵀ`.
    pub fn k_matrix(&self) -> [[T; 3]; 3] {
        let mut k = [[T::zero(); 3]; 3];
        for (i, row) in k.iter_mut().enumerate() {
            for (j, kij) in row.iter_mut().enumerate() {
                *kij = self.x[i] * self.x[j] + (0..3).map(|l| self.gamma[i][l] * self.gamma[j][l]).sum::<T>();
            }
        }
        k
    }
}

fn expectation<T: Real>(rho: &CMatrix<T>, op: &CMatrix<T>) -> T {
    let n = rho.dim();
    let mut s = Complex::new(T::zero(), T::zero());
    for i in 0..n {
        for j in 0..n {
            s += rho[(i, j)] * op[(j, i)];
        }
    }
    s.re
}

pub fn bloch_decompose<T: Real>(rho: &DensityMatrix<T>) -> Result<BlochForm<T>> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    let p = PauliBasis::new();
    let m = rho.matrix();
    let mut b = BlochForm::zero();
    for i in 0..3 {
        b.x[i] = expectation(m, &p.pair(i + 1, 0));
        b.y[i] = expectation(m, &p.pair(0, i + 1));
        for j in 0..3 {
            b.gamma[i][j] = expectation(m, &p.pair(i + 1, j + 1));
        }
    }
    Ok(b)
}

/// Inverse of [`bloch_decompose`]; fails with `NotPositive` on unphysical data.
pub fn bloch_compose<T: Real>(b: &BlochForm<T>) -> Result<DensityMatrix<T>> {
    let p = PauliBasis::new();
    let mut m = p.pair(0, 0);
    for i in 0..3 {
        m = &m + &p.pair(i + 1, 0).scale(b.x[i]);
        m = &m + &p.pair(0, i + 1).scale(b.y[i]);
        for j in 0..3 {
            m = &m + &p.pair(i + 1, j + 1).scale(b.gamma[i][j]);
        }
    }
    DensityMatrix::new(m.scale(T::c(0.25)))
}
