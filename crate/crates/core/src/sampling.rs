//! Seeded random states for property checks and oracle certification.

use num_complex::Complex;
use rand::Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::error::Result;
use crate::matrix::CMatrix;
use crate::scalar::Real;
use crate::state::{DensityMatrix, SchmidtPair, XState};

fn cnormal<R: Rng>(rng: &mut R) -> Complex<f64> {
    Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Uniform point on the probability simplex with `n` vertices.
pub fn flat_simplex<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let e: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let s: f64 = e.iter().sum();
    e.into_iter().map(|v| v / s).collect()
}

/// Full-rank random state `GG†/Tr(GG†)` from a complex Ginibre matrix.
pub fn random_density<T: Real, R: Rng>(rng: &mut R, dim: usize) -> Result<DensityMatrix<T>> {
    let g = CMatrix::from_fn(dim, |_, _| cnormal(rng));
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    let m = CMatrix::from_fn(dim, |i, j| {
        // exact Hermitian symmetry before normalization
        let z = if i <= j { w[(i, j)] } else { w[(j, i)].conj() };
        let z = z / tr;
        Complex::new(T::c(z.re), T::c(if i == j { 0.0 } else { z.im }))
    });
    DensityMatrix::new(m)
}

fn x_from<T: Real>(p: &[f64], c32: Complex<f64>, c41: Complex<f64>) -> Result<XState<T>> {
    let cast = |z: Complex<f64>| Complex::new(T::c(z.re), T::c(z.im));
    XState::new(T::c(p[0]), T::c(p[1]), T::c(p[2]), T::c(1.0 - p[0] - p[1] - p[2]), cast(c32), cast(c41))
}

fn coherence<R: Rng>(rng: &mut R, bound: f64) -> Complex<f64> {
    let r = rng.random::<f64>() * bound;
    Complex::from_polar(r, rng.random::<f64>() * std::f64::consts::TAU)
}

/// General X state: flat-simplex populations, coherence magnitudes uniform up
/// to their positivity bounds, uniform phases.
pub fn random_x_state<T: Real, R: Rng>(rng: &mut R) -> Result<XState<T>> {
    let p = flat_simplex(rng, 4);
    let c41 = coherence(rng, (p[0] * p[3]).sqrt());
    let c32 = coherence(rng, (p[1] * p[2]).sqrt());
    x_from(&p, c32, c41)
}

/// X state with `ρ32 = 0`.
pub fn random_symmetric_x<T: Real, R: Rng>(rng: &mut R) -> Result<XState<T>> {
    let p = flat_simplex(rng, 4);
    let c41 = coherence(rng, (p[0] * p[3]).sqrt());
    x_from(&p, Complex::new(0.0, 0.0), c41)
}

/// Bell-diagonal state: X form with vanishing local Bloch vectors.
pub fn random_bell_diagonal<T: Real, R: Rng>(rng: &mut R) -> Result<XState<T>> {
    // mixture of the four Bell states with weights w
    let w = flat_simplex(rng, 4);
    let (pp, pm, sp, sm) = (w[0], w[1], w[2], w[3]);
    let p = [(pp + pm) / 2.0, (sp + sm) / 2.0, (sp + sm) / 2.0];
    x_from(&p, Complex::new((sp - sm) / 2.0, 0.0), Complex::new((pp - pm) / 2.0, 0.0))
}

pub fn random_schmidt<T: Real, R: Rng>(rng: &mut R) -> Result<SchmidtPair<T>> {
    let l = rng.random::<f64>();
    SchmidtPair::new(T::c(l), T::c(1.0 - l))
}

/// Haar-random single-qubit unitary.
pub fn random_unitary_2<T: Real, R: Rng>(rng: &mut R) -> CMatrix<T> {
    let q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let n = q.iter().map(|v| v * v).sum::<f64>().sqrt();
    let (a, b) = (Complex::new(q[0] / n, q[1] / n), Complex::new(q[2] / n, q[3] / n));
    let cast = |z: Complex<f64>| Complex::new(T::c(z.re), T::c(z.im));
    CMatrix::from_fn(2, |i, j| match (i, j) {
        (0, 0) => cast(a),
        (0, 1) => cast(-b.conj()),
        (1, 0) => cast(b),
        _ => cast(a.conj()),
    })
}

/// Positive real amplitudes with unit norm.
pub fn random_w_amplitudes<T: Real, R: Rng>(rng: &mut R, n: usize) -> Vec<T> {
    let v: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal).abs() + 1e-3).collect();
    let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    v.into_iter().map(|a| T::c(a / norm)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samplers_produce_valid_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            random_density::<f64, _>(&mut rng, 4).unwrap();
            random_x_state::<f64, _>(&mut rng).unwrap().to_density().unwrap();
            assert!(random_symmetric_x::<f64, _>(&mut rng).unwrap().is_symmetric());
            random_bell_diagonal::<f64, _>(&mut rng).unwrap().to_density().unwrap();
            let u = random_unitary_2::<f64, _>(&mut rng);
            assert!((&u * &u.adjoint()).max_abs_diff(&CMatrix::identity(2)) < 1e-14);
        }
    }
}
