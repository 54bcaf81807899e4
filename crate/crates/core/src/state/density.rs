//! Validated density matrices, pure state vectors and partial traces.
//!
//! Qubits are numbered from the most significant bit of the basis index
//! (big-endian): in a four-qubit register `(c1, r1, c2, r2)` the basis state
//! `|c1 r1 c2 r2⟩` has index `8·c1 + 4·r1 + 2·c2 + r2`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::oracle::eigen::hermitian_eigs;
use crate::scalar::Real;

/// Largest register a pure state vector may describe.
pub const MAX_PURE_QUBITS: usize = 16;

/// A Hermitian, unit-trace, positive semidefinite matrix on 1 to 4 qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    m: CMatrix<T>,
}

/// Checks that `m` is a physical state and wraps it.
pub fn validate_density<T: Real>(m: CMatrix<T>) -> Result<DensityMatrix<T>> {
    let d = m.dim();
    if !matches!(d, 2 | 4 | 8 | 16) {
        return Err(Error::InvalidDimension(d));
    }
    let residual = m.hermitian_residual();
    if !(residual <= T::c(T::HERMITIAN_TOL)) {
        return Err(Error::NotHermitian { residual: residual.as_f64() });
    }
    let tr = m.trace();
    let deviation = (tr - Complex::new(T::one(), T::zero())).norm();
    if !(deviation <= T::c(T::TRACE_TOL)) {
        return Err(Error::TraceNotOne { deviation: deviation.as_f64() });
    }
    let min = hermitian_eigs(&m)?[0];
    if min < -T::c(T::PSD_TOL) {
        return Err(Error::NotPositive { min_eigenvalue: min.as_f64() });
    }
    Ok(DensityMatrix { m })
}

impl<T: Real> DensityMatrix<T> {
    pub fn new(m: CMatrix<T>) -> Result<Self> {
        validate_density(m)
    }

    /// `I/d`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::new(CMatrix::identity(dim).scale(T::one() / T::c(dim as f64)))
    }

    pub fn from_pure(psi: &PureState<T>) -> Result<Self> {
        Self::new(CMatrix::outer(psi.amplitudes(), psi.amplitudes()))
    }

    #[inline]
    pub fn matrix(&self) -> &CMatrix<T> {
        &self.m
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn num_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    /// Ascending spectrum.
    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        hermitian_eigs(&self.m)
    }

    /// `ρ ↦ U ρ U†`.
    pub fn conjugate(&self, u: &CMatrix<T>) -> Result<Self> {
        if u.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: u.dim() });
        }
        Self::new(&(u * &self.m) * &u.adjoint())
    }

    /// Partial trace over every qubit not listed in `keep`; the output qubits
    /// follow the order of `keep`.
    pub fn reduce(&self, keep: &[usize]) -> Result<Self> {
        let n = self.num_qubits();
        let idx = index_table(n, keep)?;
        let dk = 1usize << keep.len();
        let de = idx.len() / dk;
        let out = CMatrix::from_fn(dk, |i, j| {
            (0..de).fold(Complex::new(T::zero(), T::zero()), |acc, e| acc + self.m[(idx[i * de + e], idx[j * de + e])])
        });
        Self::new(out)
    }

    pub fn cast<U: Real>(&self) -> Result<DensityMatrix<U>> {
        DensityMatrix::new(self.m.cast())
    }
}

/// `a ⊗ b`.
pub fn tensor<T: Real>(a: &DensityMatrix<T>, b: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
    let d = a.dim() * b.dim();
    if d > 16 {
        return Err(Error::InvalidDimension(d));
    }
    DensityMatrix::new(a.m.kron(&b.m))
}

/// Normalized state vector on up to [`MAX_PURE_QUBITS`] qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState<T> {
    amps: Vec<Complex<T>>,
}

impl<T: Real> PureState<T> {
    pub fn new(amps: Vec<Complex<T>>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() || len > (1 << MAX_PURE_QUBITS) {
            return Err(Error::InvalidDimension(len));
        }
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if !((norm - T::one()).abs() <= T::c(T::TRACE_TOL)) {
            return Err(Error::NotNormalized { norm: norm.as_f64() });
        }
        Ok(Self { amps })
    }

    /// Real amplitudes.
    pub fn from_real(amps: &[T]) -> Result<Self> {
        Self::new(amps.iter().map(|&a| Complex::new(a, T::zero())).collect())
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn num_qubits(&self) -> usize {
        self.amps.len().trailing_zeros() as usize
    }

    pub fn norm(&self) -> T {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Reduced density matrix of the qubits in `keep` (at most four).
    pub fn reduce(&self, keep: &[usize]) -> Result<DensityMatrix<T>> {
        if keep.len() > 4 {
            return Err(Error::InvalidQubitSet(format!("cannot keep {} qubits in a dense matrix", keep.len())));
        }
        let idx = index_table(self.num_qubits(), keep)?;
        let dk = 1usize << keep.len();
        let de = idx.len() / dk;
        let out = CMatrix::from_fn(dk, |i, j| {
            (0..de).fold(Complex::new(T::zero(), T::zero()), |acc, e| {
                acc + self.amps[idx[i * de + e]] * self.amps[idx[j * de + e]].conj()
            })
        });
        DensityMatrix::new(out)
    }
}

/// Full basis index for every (kept index, environment index) pair, laid out
/// as `table[kept * d_env + env]`.
fn index_table(n: usize, keep: &[usize]) -> Result<Vec<usize>> {
    if keep.is_empty() {
        return Err(Error::InvalidQubitSet("empty".into()));
    }
    let mut seen = vec![false; n];
    for &q in keep {
        if q >= n {
            return Err(Error::InvalidQubitSet(format!("qubit {q} out of range for {n} qubits")));
        }
        if std::mem::replace(&mut seen[q], true) {
            return Err(Error::InvalidQubitSet(format!("qubit {q} repeated")));
        }
    }
    let env: Vec<usize> = (0..n).filter(|q| !seen[*q]).collect();
    let dk = 1usize << keep.len();
    let de = 1usize << env.len();
    let mut table = Vec::with_capacity(dk * de);
    for i in 0..dk {
        for e in 0..de {
            let mut full = 0usize;
            for (pos, &q) in keep.iter().enumerate() {
                let bit = (i >> (keep.len() - 1 - pos)) & 1;
                full |= bit << (n - 1 - q);
            }
            for (pos, &q) in env.iter().enumerate() {
                let bit = (e >> (env.len() - 1 - pos)) & 1;
                full |= bit << (n - 1 - q);
            }
            table.push(full);
        }
    }
    Ok(table)
}

/// Spectrum `(λ0 ≥ λ1)` of a single-qubit marginal of a pure bipartition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtPair<T> {
    pub lambda0: T,
    pub lambda1: T,
}

impl<T: Real> SchmidtPair<T> {
    /// Orders the pair; fails unless both lie in `[0, 1]` and sum to one.
    pub fn new(a: T, b: T) -> Result<Self> {
        let tol = T::c(T::TRACE_TOL);
        if !((a + b - T::one()).abs() <= tol) || a < -tol || b < -tol {
            return Err(Error::Domain(format!("Schmidt coefficients {a}, {b} do not form a distribution")));
        }
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        Ok(Self { lambda0: hi.min(T::one()), lambda1: lo.max(T::zero()) })
    }

    /// Eigenvalues of a single-qubit reduced state.
    pub fn from_marginal(rho: &DensityMatrix<T>) -> Result<Self> {
        if rho.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: rho.dim() });
        }
        let ev = rho.eigenvalues()?;
        Self::new(ev[1], ev[0])
    }
}
