//! Derivative-free minimizers used by the brute-force oracles.

use crate::scalar::Real;

/// Settings shared by the brute-force minimizations.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerConfig {
    /// Number of independent simplex starts.
    pub starts: usize,
    /// A simplex run stops once its objective spread falls below this.
    pub tolerance: f64,
    /// Iteration cap for one simplex run.
    pub max_iterations: usize,
    /// Fresh simplices rebuilt around the incumbent after a run converges.
    pub restarts: usize,
    /// Seed for every random choice (start-point scrambling).
    pub seed: u64,
    /// GQD-2 oracle: search the full classical-quantum family instead of
    /// only the measurement basis.
    pub full_cq_search: bool,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self { starts: 64, tolerance: 1e-9, max_iterations: 2000, restarts: 4, seed: 0, full_cq_search: false }
    }
}

impl OptimizerConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }
}

#[derive(Debug, Clone)]
pub struct Minimum<T> {
    pub x: Vec<T>,
    pub value: T,
    pub evaluations: usize,
}

/// Nelder–Mead simplex descent with the standard coefficients
/// (reflection 1, expansion 2, contraction ½, shrink ½).
pub fn nelder_mead<T: Real, F: Fn(&[T]) -> T>(
    f: &F,
    x0: &[T],
    step: &[T],
    tolerance: T,
    max_iterations: usize,
) -> Minimum<T> {
    let n = x0.len();
    let half = T::c(0.5);
    let two = T::c(2.0);
    let mut evaluations = 0usize;
    let mut eval = |x: &[T]| {
        evaluations += 1;
        let v = f(x);
        if v.is_nan() {
            T::infinity()
        } else {
            v
        }
    };
    let mut pts: Vec<Vec<T>> = Vec::with_capacity(n + 1);
    pts.push(x0.to_vec());
    for i in 0..n {
        let mut p = x0.to_vec();
        p[i] += step[i];
        pts.push(p);
    }
    let mut vals: Vec<T> = pts.iter().map(|p| eval(p)).collect();
    let mut centroid = vec![T::zero(); n];
    let mut trial = vec![T::zero(); n];
    let mut trial2 = vec![T::zero(); n];
    for _ in 0..max_iterations {
        // sort ascending by value; stable so ties keep insertion order
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap_or(std::cmp::Ordering::Equal));
        pts = order.iter().map(|&i| pts[i].clone()).collect();
        vals = order.iter().map(|&i| vals[i]).collect();
        if (vals[n] - vals[0]).abs() <= tolerance {
            break;
        }
        for (j, c) in centroid.iter_mut().enumerate() {
            *c = pts[..n].iter().map(|p| p[j]).sum::<T>() / T::c(n as f64);
        }
        for j in 0..n {
            trial[j] = centroid[j] + (centroid[j] - pts[n][j]);
        }
        let fr = eval(&trial);
        if fr < vals[0] {
            for j in 0..n {
                trial2[j] = centroid[j] + two * (centroid[j] - pts[n][j]);
            }
            let fe = eval(&trial2);
            if fe < fr {
                pts[n].copy_from_slice(&trial2);
                vals[n] = fe;
            } else {
                pts[n].copy_from_slice(&trial);
                vals[n] = fr;
            }
        } else if fr < vals[n - 1] {
            pts[n].copy_from_slice(&trial);
            vals[n] = fr;
        } else {
            let outside = fr < vals[n];
            for j in 0..n {
                trial2[j] = if outside {
                    centroid[j] + half * (trial[j] - centroid[j])
                } else {
                    centroid[j] + half * (pts[n][j] - centroid[j])
                };
            }
            let fc = eval(&trial2);
            if fc < vals[n].min(fr) {
                pts[n].copy_from_slice(&trial2);
                vals[n] = fc;
            } else {
                for i in 1..=n {
                    for j in 0..n {
                        pts[i][j] = pts[0][j] + half * (pts[i][j] - pts[0][j]);
                    }
                    vals[i] = eval(&pts[i]);
                }
            }
        }
    }
    let best = (0..=n).min_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap_or(std::cmp::Ordering::Equal)).unwrap_or(0);
    Minimum { x: pts[best].clone(), value: vals[best], evaluations }
}

/// Nelder–Mead followed by up to `restarts` fresh simplices of the original
/// size around the incumbent, stopping when a restart gains less than
/// `tolerance`.
pub fn nelder_mead_restarted<T: Real, F: Fn(&[T]) -> T>(
    f: &F,
    x0: &[T],
    step: &[T],
    tolerance: T,
    max_iterations: usize,
    restarts: usize,
) -> Minimum<T> {
    let mut best = nelder_mead(f, x0, step, tolerance, max_iterations);
    for _ in 0..restarts {
        let next = nelder_mead(f, &best.x, step, tolerance, max_iterations);
        let evaluations = best.evaluations + next.evaluations;
        let gain = best.value - next.value;
        if next.value < best.value {
            best = Minimum { evaluations, ..next };
        } else {
            best.evaluations = evaluations;
        }
        if gain <= tolerance {
            break;
        }
    }
    best
}

/// Golden-section search for a minimum of a unimodal function on `[a, b]`,
/// narrowed until the bracket is shorter than `tol`. Returns the best point
/// seen, including the bracket ends.
pub fn golden_section<T: Real, F: FnMut(T) -> T>(mut f: F, a: T, b: T, tol: T) -> (T, T) {
    let inv_phi = T::c((5f64.sqrt() - 1.0) / 2.0);
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let mut best = (lo, f(lo));
    let fhi = f(hi);
    if fhi < best.1 {
        best = (hi, fhi);
    }
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    for cand in [(x1, f1), (x2, f2)] {
        if cand.1 < best.1 {
            best = cand;
        }
    }
    best
}

/// Halton points with a Cranley–Patterson random shift per coordinate.
#[derive(Debug, Clone)]
pub struct ScrambledHalton {
    shift: Vec<f64>,
}

const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

impl ScrambledHalton {
    pub fn new<R: rand::Rng>(dim: usize, rng: &mut R) -> Self {
        assert!(dim <= PRIMES.len(), "at most {} dimensions", PRIMES.len());
        Self { shift: (0..dim).map(|_| rng.random::<f64>()).collect() }
    }

    /// Point number `index` in `[0, 1)^dim`.
    pub fn point(&self, index: u64) -> Vec<f64> {
        self.shift
            .iter()
            .zip(PRIMES)
            .map(|(s, p)| {
                let v = radical_inverse(index + 1, p) + s;
                v - v.floor()
            })
            .collect()
    }
}

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut r = 0.0;
    while i > 0 {
        r += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    r
}
