//! Brute-force geometric discords: direct minimization of the distance from
//! a two-qubit state to the set of classical-quantum (zero-discord) states
//! `χ = p |v⟩⟨v| ⊗ ρ(r0) + (1−p) |v⊥⟩⟨v⊥| ⊗ ρ(r1)`.

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::oracle::norms::{hs_norm_sq, trace_norm};
use crate::oracle::optimize::{golden_section, nelder_mead_restarted, OptimizerConfig, ScrambledHalton};
use crate::scalar::Real;
use crate::state::DensityMatrix;

const GRID_THETA: usize = 181;
const GRID_PHI: usize = 360;
const ANGLE_TOL: f64 = 1e-10;
const MAX_REFINE_CYCLES: usize = 200;

/// A member of the zero-discord set, parameterized by the measurement basis
/// of qubit A, the mixing weight and the two conditional Bloch vectors of B.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CQCandidate<T> {
    /// Polar angle in `[0, π]`.
    pub theta: T,
    /// Azimuth in `[0, 2π)`.
    pub phi: T,
    pub weight: T,
    pub r0: [T; 3],
    pub r1: [T; 3],
}

impl<T: Real> CQCandidate<T> {
    /// Maps an unconstrained 9-vector onto a valid candidate: angles are
    /// wrapped, the weight is `sin²`, and Bloch vectors outside the unit ball
    /// are projected radially onto it.
    pub fn from_params(p: &[T]) -> Self {
        assert_eq!(p.len(), 9);
        let tau = T::c(2.0) * T::PI();
        let wrap = |a: T| a - tau * (a / tau).floor();
        let mut theta = wrap(p[0]);
        let mut phi = p[1];
        if theta > T::PI() {
            theta = tau - theta;
            phi += T::PI();
        }
        let ball = |v: &[T]| {
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            let s = if n > T::one() { T::one() / n } else { T::one() };
            [v[0] * s, v[1] * s, v[2] * s]
        };
        let sw = p[2].sin();
        Self { theta, phi: wrap(phi), weight: sw * sw, r0: ball(&p[3..6]), r1: ball(&p[6..9]) }
    }

    pub fn to_matrix(&self) -> CMatrix<T> {
        let (v, w) = basis_pair(self.theta, self.phi);
        let qubit = |r: &[T; 3]| {
            let h = T::c(0.5);
            let mut m = CMatrix::zeros(2);
            m[(0, 0)] = Complex::new(h * (T::one() + r[2]), T::zero());
            m[(1, 1)] = Complex::new(h * (T::one() - r[2]), T::zero());
            m[(0, 1)] = Complex::new(h * r[0], -h * r[1]);
            m[(1, 0)] = Complex::new(h * r[0], h * r[1]);
            m
        };
        let a = CMatrix::outer(&v, &v).scale(self.weight).kron(&qubit(&self.r0));
        let b = CMatrix::outer(&w, &w).scale(T::one() - self.weight).kron(&qubit(&self.r1));
        &a + &b
    }

    pub fn to_density(&self) -> Result<DensityMatrix<T>> {
        DensityMatrix::new(self.to_matrix())
    }
}

/// `|v⟩ = (cos θ/2, e^{iφ} sin θ/2)` and its orthogonal complement.
fn basis_pair<T: Real>(theta: T, phi: T) -> ([Complex<T>; 2], [Complex<T>; 2]) {
    let half = T::c(0.5);
    let (c, s) = ((theta * half).cos(), (theta * half).sin());
    let e = Complex::from_polar(T::one(), phi);
    ([Complex::new(c, T::zero()), e * s], [-(e.conj() * s), Complex::new(c, T::zero())])
}

/// `Π_v(ρ)`: qubit A dephased in the basis `{|v⟩, |v⊥⟩}`.
pub fn dephase<T: Real>(rho: &DensityMatrix<T>, theta: T, phi: T) -> Result<DensityMatrix<T>> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    let (v, w) = basis_pair(theta, phi);
    let i2 = CMatrix::identity(2);
    let p0 = CMatrix::outer(&v, &v).kron(&i2);
    let p1 = CMatrix::outer(&w, &w).kron(&i2);
    let m = rho.matrix();
    DensityMatrix::new(&(&(&p0 * m) * &p0) + &(&(&p1 * m) * &p1))
}

/// `2‖ρ − Π_v(ρ)‖₂²`, evaluated from the coherent block
/// `B_{bb'} = ⟨v b|ρ|v⊥ b'⟩`: the difference consists of `B` and `B†`, so the
/// value is `4 Σ |B_{bb'}|²`.
pub fn dephasing_distance<T: Real>(rho: &CMatrix<T>, theta: T, phi: T) -> T {
    let (v, w) = basis_pair(theta, phi);
    let mut s = T::zero();
    for b in 0..2 {
        for bp in 0..2 {
            let mut z = Complex::new(T::zero(), T::zero());
            for a in 0..2 {
                for ap in 0..2 {
                    z += v[a].conj() * w[ap] * rho[(2 * a + b, 2 * ap + bp)];
                }
            }
            s += z.norm_sqr();
        }
    }
    T::c(4.0) * s
}

fn check_two_qubit<T: Real>(rho: &DensityMatrix<T>) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    Ok(())
}

/// GQD-2 by direct search. By default only the measurement basis is
/// optimized (a 181×360 grid followed by alternating golden-section
/// refinement); with `full_cq_search` the whole candidate family is searched.
pub fn gqd2_brute<T: Real>(rho: &DensityMatrix<T>, cfg: &OptimizerConfig) -> Result<T> {
    check_two_qubit(rho)?;
    if cfg.full_cq_search {
        let m = rho.matrix();
        return Ok(multistart_cq(cfg, |c| T::c(2.0) * hs_norm_sq(&(m - &c.to_matrix()))));
    }
    let m = rho.matrix();
    let f = |t: T, p: T| dephasing_distance(m, t, p);
    let dt = T::PI() / T::c((GRID_THETA - 1) as f64);
    let dp = T::c(2.0) * T::PI() / T::c(GRID_PHI as f64);
    let mut best = (T::zero(), T::zero(), T::infinity());
    for i in 0..GRID_THETA {
        let t = dt * T::c(i as f64);
        for j in 0..GRID_PHI {
            let p = dp * T::c(j as f64);
            let v = f(t, p);
            if v < best.2 {
                best = (t, p, v);
            }
        }
    }
    let (mut t, mut p, mut v) = best;
    let tol = T::c(ANGLE_TOL);
    for _ in 0..MAX_REFINE_CYCLES {
        let (t1, _) = golden_section(|x| f(x, p), t - dt, t + dt, tol);
        let (p1, v1) = golden_section(|y| f(t1, y), p - dp, p + dp, tol);
        if v1 > v {
            break;
        }
        let moved = (t1 - t).abs() + (p1 - p).abs();
        t = t1;
        p = p1;
        v = v1;
        if moved < tol {
            break;
        }
    }
    Ok(v)
}

/// GQD-1 by multistart simplex search over the full candidate family.
/// The result is the best distance found, an upper bound on the minimum.
pub fn gqd1_brute<T: Real>(rho: &DensityMatrix<T>, cfg: &OptimizerConfig) -> Result<T> {
    check_two_qubit(rho)?;
    let m = rho.matrix();
    Ok(multistart_cq(cfg, |c| trace_norm(&(m - &c.to_matrix())).unwrap_or(T::infinity())))
}

fn multistart_cq<T: Real, F>(cfg: &OptimizerConfig, objective: F) -> T
where
    F: Fn(&CQCandidate<T>) -> T + Sync,
{
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let halton = ScrambledHalton::new(9, &mut rng);
    let pi = std::f64::consts::PI;
    let lo = [0.0, 0.0, 0.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0];
    let span = [pi, 2.0 * pi, 0.5 * pi, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0];
    let step: Vec<T> = [0.4, 0.8, 0.3, 0.3, 0.3, 0.3, 0.3, 0.3, 0.3].iter().map(|&s| T::c(s)).collect();
    let f = |p: &[T]| objective(&CQCandidate::from_params(p));
    let results: Vec<T> = (0..cfg.starts)
        .into_par_iter()
        .map(|k| {
            let u = halton.point(k as u64);
            let x0: Vec<T> = (0..9).map(|i| T::c(lo[i] + span[i] * u[i])).collect();
            nelder_mead_restarted(&f, &x0, &step, T::c(cfg.tolerance), cfg.max_iterations, cfg.restarts).value
        })
        .collect();
    results.into_iter().fold(T::infinity(), T::min)
}
