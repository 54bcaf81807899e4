//! Two-qubit X-shaped states and the singular-value data of their
//! correlation matrix.
//!
//! In the computational basis `|00⟩, |01⟩, |10⟩, |11⟩` an X state has
//! nonzero entries only on the diagonal `ρ11..ρ44` and on the anti-diagonal
//! coherences `ρ41` (between `|11⟩` and `|00⟩`) and `ρ32` (between `|10⟩` and
//! `|01⟩`).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::Real;
use crate::state::density::DensityMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState<T> {
    pub rho11: T,
    pub rho22: T,
    pub rho33: T,
    pub rho44: T,
    pub rho32: Complex<T>,
    pub rho41: Complex<T>,
}

impl<T: Real> XState<T> {
    /// Checks normalization and the 2×2 positivity bounds on both coherences.
    pub fn new(rho11: T, rho22: T, rho33: T, rho44: T, rho32: Complex<T>, rho41: Complex<T>) -> Result<Self> {
        let x = Self { rho11, rho22, rho33, rho44, rho32, rho41 };
        let psd = T::c(T::PSD_TOL);
        let diag = [rho11, rho22, rho33, rho44];
        if diag.iter().any(|d| !(*d >= -psd)) {
            return Err(Error::InvalidXState(format!("negative population in {diag:?}")));
        }
        let sum = rho11 + rho22 + rho33 + rho44;
        if !((sum - T::one()).abs() <= T::c(T::TRACE_TOL)) {
            return Err(Error::TraceNotOne { deviation: (sum - T::one()).abs().as_f64() });
        }
        let clamp = |v: T| v.max(T::zero());
        if rho41.norm() > (clamp(rho11) * clamp(rho44)).sqrt() + psd {
            return Err(Error::InvalidXState(format!("|rho41| = {} exceeds sqrt(rho11 rho44)", rho41.norm())));
        }
        if rho32.norm() > (clamp(rho22) * clamp(rho33)).sqrt() + psd {
            return Err(Error::InvalidXState(format!("|rho32| = {} exceeds sqrt(rho22 rho33)", rho32.norm())));
        }
        Ok(x)
    }

    /// Real-coherence constructor.
    pub fn real(rho11: T, rho22: T, rho33: T, rho44: T, rho32: T, rho41: T) -> Result<Self> {
        Self::new(rho11, rho22, rho33, rho44, Complex::new(rho32, T::zero()), Complex::new(rho41, T::zero()))
    }

    /// True when one of the two coherences vanishes.
    pub fn is_symmetric(&self) -> bool {
        let tol = T::c(T::OFF_X_TOL);
        self.rho32.norm() <= tol || self.rho41.norm() <= tol
    }

    /// Local `z` rotations that make both coherences real and nonnegative.
    pub fn canonical(&self) -> Self {
        Self {
            rho32: Complex::new(self.rho32.norm(), T::zero()),
            rho41: Complex::new(self.rho41.norm(), T::zero()),
            ..*self
        }
    }

    pub fn to_matrix(&self) -> CMatrix<T> {
        let mut m = CMatrix::from_real_diag(&[self.rho11, self.rho22, self.rho33, self.rho44]);
        m[(3, 0)] = self.rho41;
        m[(0, 3)] = self.rho41.conj();
        m[(2, 1)] = self.rho32;
        m[(1, 2)] = self.rho32.conj();
        m
    }

    pub fn to_density(&self) -> Result<DensityMatrix<T>> {
        DensityMatrix::new(self.to_matrix())
    }
}

/// Extracts the X entries, rejecting states with off-X residue.
pub fn x_project<T: Real>(rho: &DensityMatrix<T>) -> Result<XState<T>> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    let m = rho.matrix();
    let mut max_off = T::zero();
    for i in 0..4 {
        for j in 0..4 {
            if i != j && i + j != 3 {
                max_off = max_off.max(m[(i, j)].norm());
            }
        }
    }
    if !(max_off < T::c(T::OFF_X_TOL)) {
        return Err(Error::NotXShape { max_off_x: max_off.as_f64() });
    }
    XState::new(m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re, m[(2, 1)], m[(3, 0)])
}

/// Singular-value data of the correlation matrix of an X state, computed
/// after phase canonicalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XSpectralData<T> {
    /// `2(ρ32 + ρ41)`
    pub gamma1: T,
    /// `2(ρ32 − ρ41)`
    pub gamma2: T,
    /// `1 − 2(ρ22 + ρ33)`
    pub gamma3: T,
    /// `z` component of the Bloch vector of qubit A.
    pub x3: T,
    /// `min{γ3², γ1²}`
    pub gamma_min: T,
    /// `max{γ3², γ2² + x3²}`
    pub gamma_max: T,
    /// `min{γ1², γ3² + x3²}`
    pub gamma_min_prime: T,
    /// Geometric mean of the populations paired with the vanishing coherence:
    /// `√(ρ22ρ33)` when `ρ41` dominates, `√(ρ11ρ44)` otherwise.
    pub eta: T,
}

pub fn x_spectral<T: Real>(x: &XState<T>) -> XSpectralData<T> {
    let two = T::c(2.0);
    let c = x.canonical();
    let (r32, r41) = (c.rho32.re, c.rho41.re);
    let gamma1 = two * (r32 + r41);
    let gamma2 = two * (r32 - r41);
    let gamma3 = T::one() - two * (x.rho22 + x.rho33);
    let x3 = two * (x.rho11 + x.rho22) - T::one();
    let (g1s, g2s, g3s, x3s) = (gamma1 * gamma1, gamma2 * gamma2, gamma3 * gamma3, x3 * x3);
    let eta =
        if r41 >= r32 { (x.rho22 * x.rho33).max(T::zero()).sqrt() } else { (x.rho11 * x.rho44).max(T::zero()).sqrt() };
    XSpectralData {
        gamma1,
        gamma2,
        gamma3,
        x3,
        gamma_min: g3s.min(g1s),
        gamma_max: g3s.max(g2s + x3s),
        gamma_min_prime: g1s.min(g3s + x3s),
        eta,
    }
}

/// Compresses a state on `(c, q1, q2)` into a two-qubit state on `c` and a
/// logical qubit spanned by `basis` inside the `(q1, q2)` space.
pub fn logical_compress<T: Real>(rho: &DensityMatrix<T>, basis: [&[Complex<T>]; 2]) -> Result<XState<T>> {
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch { expected: 8, found: rho.dim() });
    }
    if basis.iter().any(|v| v.len() != 4) {
        return Err(Error::InvalidBasis("basis vectors must have 4 components".into()));
    }
    let inner = |u: &[Complex<T>], v: &[Complex<T>]| {
        u.iter().zip(v).fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b)
    };
    let tol = T::c(T::OFF_X_TOL);
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let target = if i == j { T::one() } else { T::zero() };
            let dev = (inner(u, v) - Complex::new(target, T::zero())).norm();
            if dev > tol {
                return Err(Error::InvalidBasis(format!("<e{i}|e{j}> deviates from {target} by {dev}")));
            }
        }
    }
    let m = rho.matrix();
    // ⟨a, e_i| ρ |b, e_j⟩
    let element = |a: usize, i: usize, b: usize, j: usize| {
        let mut s = Complex::new(T::zero(), T::zero());
        for k in 0..4 {
            for l in 0..4 {
                s += basis[i][k].conj() * m[(4 * a + k, 4 * b + l)] * basis[j][l];
            }
        }
        s
    };
    let logical = CMatrix::from_fn(4, |r, c| element(r / 2, r % 2, c / 2, c % 2));
    let weight = logical.trace().re;
    let leaked = T::one() - weight;
    if leaked > tol {
        return Err(Error::SupportLeak { leaked: leaked.as_f64() });
    }
    x_project(&DensityMatrix::new(logical.scale(T::one() / weight))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::density::PureState;

    fn bell_x() -> XState<f64> {
        XState::real(0.5, 0.0, 0.0, 0.5, 0.0, 0.5).unwrap()
    }

    #[test]
    fn project_bell() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let rho = DensityMatrix::from_pure(&PureState::from_real(&[h, 0.0, 0.0, h]).unwrap()).unwrap();
        let x = x_project(&rho).unwrap();
        assert!((x.rho11 - 0.5).abs() < 1e-15 && (x.rho44 - 0.5).abs() < 1e-15);
        assert!((x.rho41.re - 0.5).abs() < 1e-15 && x.rho32.norm() == 0.0);
        assert!(x.is_symmetric());
    }

    #[test]
    fn off_x_entry_rejected() {
        let mut m = CMatrix::<f64>::identity(4).scale(0.25);
        m[(0, 1)] = Complex::new(0.1, 0.0);
        m[(1, 0)] = Complex::new(0.1, 0.0);
        let rho = DensityMatrix::new(m).unwrap();
        match x_project(&rho) {
            Err(Error::NotXShape { max_off_x }) => assert!((max_off_x - 0.1).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn spectral_bell_and_mixed() {
        let s = x_spectral(&bell_x());
        assert_eq!((s.gamma1, s.gamma2, s.gamma3, s.x3), (1.0, -1.0, 1.0, 0.0));
        let m = x_spectral(&XState::real(0.25, 0.25, 0.25, 0.25, 0.0, 0.0).unwrap());
        assert_eq!((m.gamma1, m.gamma2, m.gamma3, m.x3), (0.0, 0.0, 0.0, 0.0));
        assert_eq!((m.gamma_min, m.gamma_max, m.gamma_min_prime, m.eta), (0.0, 0.0, 0.0, 0.25));
    }

    #[test]
    fn canonicalization_removes_phases() {
        let x =
            XState::new(0.4f64, 0.1, 0.2, 0.3, Complex::from_polar(0.1, 1.0), Complex::from_polar(0.2, -2.0)).unwrap();
        let s = x_spectral(&x);
        assert!((s.gamma1 - 0.6).abs() < 1e-15);
        assert!((s.gamma2 + 0.2).abs() < 1e-15);
    }

    #[test]
    fn coherence_bound_enforced() {
        assert!(XState::real(0.25, 0.25, 0.25, 0.25, 0.0, 0.3).is_err());
        assert!(XState::real(0.5, 0.25, 0.25, 0.1, 0.0, 0.0).is_err());
    }

    #[test]
    fn compress_rejects_non_orthogonal_basis() {
        let rho = DensityMatrix::<f64>::maximally_mixed(8).unwrap();
        let e0 = [Complex::new(1.0, 0.0), Complex::new(0.0, 0.0), Complex::new(0.0, 0.0), Complex::new(0.0, 0.0)];
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let e1 = [Complex::new(h, 0.0), Complex::new(h, 0.0), Complex::new(0.0, 0.0), Complex::new(0.0, 0.0)];
        assert!(matches!(logical_compress(&rho, [&e0, &e1]), Err(Error::InvalidBasis(_))));
    }

    #[test]
    fn compress_detects_leak() {
        let rho = DensityMatrix::<f64>::maximally_mixed(8).unwrap();
        let z = Complex::new(0.0, 0.0);
        let o = Complex::new(1.0, 0.0);
        let e0 = [o, z, z, z];
        let e1 = [z, o, z, z];
        match logical_compress(&rho, [&e0, &e1]) {
            Err(Error::SupportLeak { leaked }) => assert!((leaked - 0.5).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
    }
}
