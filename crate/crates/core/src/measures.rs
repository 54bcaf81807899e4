//! Closed-form geometric discords and concurrence.
//!
//! * GQD-2 (Hilbert–Schmidt, normalized so Bell states give 1):
//!   `½(k1 + k2 + k3 − k_max)` with `kᵢ` the eigenvalues of `K = x xᵀ + ΓΓᵀ`.
//! * GQD-1 (trace norm) for X states, from the singular values `γᵢ` of the
//!   correlation matrix:
//!   `√[(γ1²γ_max − γ2²γ_min) / (γ_max − γ_min + γ1² − γ2²)]`,
//!   which reduces to `|γ1|` whenever one coherence vanishes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::oracle::eigen::hermitian_eigs;
use crate::scalar::Real;
use crate::state::{bloch_decompose, x_spectral, BlochForm, SchmidtPair, XState};

/// Denominator magnitude below which the X-state GQD-1 formula is replaced by
/// its homogeneous limit `|γ1|`.
pub const HOMOGENEOUS_TOL: f64 = 1e-12;

/// Eigenvalues of `K = x xᵀ + ΓΓᵀ`, ascending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KSpectrum<T> {
    pub k: [T; 3],
    pub k_max: T,
}

impl<T: Real> KSpectrum<T> {
    pub fn of(b: &BlochForm<T>) -> Result<Self> {
        let km = b.k_matrix();
        let m = CMatrix::from_fn(3, |i, j| num_complex::Complex::new(km[i][j], T::zero()));
        let ev = hermitian_eigs(&m)?;
        // K is positive semidefinite; clip rounding below zero
        let k = [ev[0].max(T::zero()), ev[1].max(T::zero()), ev[2].max(T::zero())];
        Ok(Self { k, k_max: k[2] })
    }
}

/// GQD-1, GQD-2 and concurrence of one state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureSet<T> {
    #[serde(rename = "dg1")]
    pub d_g1: T,
    #[serde(rename = "dg2")]
    pub d_g2: T,
    pub concurrence: T,
}

pub fn gqd2_closed<T: Real>(b: &BlochForm<T>) -> Result<T> {
    let s = KSpectrum::of(b)?;
    Ok((s.k[0] + s.k[1] + s.k[2] - s.k_max) * T::c(0.5))
}

pub fn gqd1_x<T: Real>(x: &XState<T>) -> T {
    let s = x_spectral(x);
    let g1s = s.gamma1 * s.gamma1;
    let g2s = s.gamma2 * s.gamma2;
    if g1s == g2s {
        return s.gamma1.abs();
    }
    let den = s.gamma_max - s.gamma_min + g1s - g2s;
    if den.abs() < T::c(HOMOGENEOUS_TOL) {
        return s.gamma1.abs();
    }
    ((g1s * s.gamma_max - g2s * s.gamma_min) / den).max(T::zero()).sqrt()
}

/// Concurrence of a general X state.
pub fn concurrence_x<T: Real>(x: &XState<T>) -> T {
    let two = T::c(2.0);
    let a = x.rho41.norm() - (x.rho22 * x.rho33).max(T::zero()).sqrt();
    let b = x.rho32.norm() - (x.rho11 * x.rho44).max(T::zero()).sqrt();
    two * T::zero().max(a).max(b)
}

/// Simplified measures for X states with one vanishing coherence.
pub fn gqd_symmetric_x<T: Real>(x: &XState<T>) -> Result<MeasureSet<T>> {
    if !x.is_symmetric() {
        return Err(Error::NotSymmetricX { rho32: x.rho32.norm().as_f64(), rho41: x.rho41.norm().as_f64() });
    }
    let s = x_spectral(x);
    let g1 = s.gamma1.abs();
    Ok(MeasureSet {
        d_g1: g1,
        d_g2: (g1 * g1 + s.gamma_min_prime) * T::c(0.5),
        concurrence: T::zero().max(g1 - T::c(2.0) * s.eta),
    })
}

/// Pure-state bipartition values: GQD-1 = C = 2√(λ0λ1), GQD-2 = C².
pub fn pure_measures<T: Real>(s: &SchmidtPair<T>) -> MeasureSet<T> {
    let prod = s.lambda0 * s.lambda1;
    let c = T::c(2.0) * prod.sqrt();
    MeasureSet { d_g1: c, d_g2: T::c(4.0) * prod, concurrence: c }
}

/// All three closed forms for a general (not necessarily symmetric) X state.
pub fn measure_x<T: Real>(x: &XState<T>) -> Result<MeasureSet<T>> {
    let b = bloch_decompose(&x.to_density()?)?;
    Ok(MeasureSet { d_g1: gqd1_x(x), d_g2: gqd2_closed(&b)?, concurrence: concurrence_x(x) })
}
