//! Cyclic Jacobi eigensolver for small complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies the classic real Jacobi rotation, so the composite
//! transformation is `U = D·R` with `D = diag(1, …, e^{-iφ}, …)`. Sweeps visit
//! pivots in row-major order `(0,1), (0,2), …, (n-2,n-1)`, which makes the
//! result bit-for-bit reproducible.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::Real;

pub const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition `H = V diag(values) V†` with ascending eigenvalues.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    pub values: Vec<T>,
    /// Columns are the normalized eigenvectors, in the order of `values`.
    pub vectors: CMatrix<T>,
}

impl<T: Real> HermitianEigen<T> {
    pub fn reconstruct(&self) -> CMatrix<T> {
        let n = self.values.len();
        CMatrix::from_fn(n, |i, j| {
            (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, k| {
                acc + self.vectors[(i, k)] * self.vectors[(j, k)].conj() * self.values[k]
            })
        })
    }
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn hermitian_eigs<T: Real>(h: &CMatrix<T>) -> Result<Vec<T>> {
    let mut a = h.clone();
    jacobi_in_place(&mut a, None)?;
    let mut values: Vec<T> = (0..a.dim()).map(|i| a[(i, i)].re).collect();
    values.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    Ok(values)
}

/// Eigenvalues and eigenvectors of a Hermitian matrix.
pub fn hermitian_eigen<T: Real>(h: &CMatrix<T>) -> Result<HermitianEigen<T>> {
    let n = h.dim();
    let mut a = h.clone();
    let mut v = CMatrix::identity(n);
    jacobi_in_place(&mut a, Some(&mut v))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.partial_cmp(&a[(y, y)].re).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = CMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

fn jacobi_in_place<T: Real>(a: &mut CMatrix<T>, mut v: Option<&mut CMatrix<T>>) -> Result<()> {
    let n = a.dim();
    let residual = a.hermitian_residual();
    let scale = a.fro_norm_sq().sqrt().max(T::one());
    if !(residual <= T::c(100.0 * T::HERMITIAN_TOL) * scale) {
        return Err(Error::NotHermitian { residual: residual.as_f64() });
    }
    let tol = T::c(T::EIG_TOL) * scale;
    for i in 0..n {
        a[(i, i)].im = T::zero();
    }
    let half = T::c(0.5);
    let mut off = a.off_diagonal_norm();
    let mut sweeps = 0;
    while off >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off.as_f64() });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == T::zero() {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) * half / mag;
                let t = if theta.is_infinite() {
                    T::zero()
                } else {
                    let s = if theta >= T::zero() { T::one() } else { -T::one() };
                    s / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                if t == T::zero() {
                    a[(p, q)] = Complex::new(T::zero(), T::zero());
                    a[(q, p)] = Complex::new(T::zero(), T::zero());
                    continue;
                }
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                // phase that makes the pivot real: e = conj(a_pq)/|a_pq|
                let e = apq.conj() / mag;
                let u_pp = Complex::new(c, T::zero());
                let u_pq = Complex::new(s, T::zero());
                let u_qp = e * (-s);
                let u_qq = e * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * u_pp + akq * u_qp;
                    a[(k, q)] = akp * u_pq + akq * u_qq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
                    a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
                }
                a[(p, q)] = Complex::new(T::zero(), T::zero());
                a[(q, p)] = Complex::new(T::zero(), T::zero());
                a[(p, p)].im = T::zero();
                a[(q, q)].im = T::zero();
                if let Some(v) = v.as_deref_mut() {
                    for k in 0..n {
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = vkp * u_pp + vkq * u_qp;
                        v[(k, q)] = vkp * u_pq + vkq * u_qq;
                    }
                }
            }
        }
        off = a.off_diagonal_norm();
    }
    Ok(())
}
