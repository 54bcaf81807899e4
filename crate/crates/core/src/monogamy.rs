//! Monogamy deficits centered on `c1` for the cavity-reservoir family, and
//! the squared-GQD-1 deficit of generalized W states.

use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::{bipartition_measures, pair_gqd, DynamicsPoint, PairLabel};
use crate::error::{Error, Result};
use crate::measures::{gqd_symmetric_x, pure_measures, MeasureSet};
use crate::scalar::Real;
use crate::state::{x_project, PureState, SchmidtPair};

/// Tolerance for the sign classification of a deficit column.
pub const SIGN_TOL: f64 = 1e-12;
pub const MAX_W_QUBITS: usize = 12;

/// Signed deficits. `m3*` use the split `c1 | r1 | (c2r2)`, `m3rho*` the
/// split `c1 | c2 | r2` of the logical qubit, `m4*` the four physical qubits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonogamyReport<T> {
    pub m3_g1: T,
    pub m3rho_g1: T,
    pub m4_g1: T,
    pub m3_g2: T,
    pub m3rho_g2: T,
    pub m4_g2: T,
    pub m3sq: T,
    pub m3sq_rho: T,
    pub m4sq: T,
}

pub const COLUMNS: [&str; 9] = ["m3_g1", "m3rho_g1", "m4_g1", "m3_g2", "m3rho_g2", "m4_g2", "m3sq", "m3sq_rho", "m4sq"];

impl<T: Real> MonogamyReport<T> {
    /// Values in [`COLUMNS`] order.
    pub fn values(&self) -> [T; 9] {
        [
            self.m3_g1,
            self.m3rho_g1,
            self.m4_g1,
            self.m3_g2,
            self.m3rho_g2,
            self.m4_g2,
            self.m3sq,
            self.m3sq_rho,
            self.m4sq,
        ]
    }
}

pub fn report<T: Real>(p: &DynamicsPoint<T>) -> Result<MonogamyReport<T>> {
    let rest = bipartition_measures(p, PairLabel::C1Rest)?;
    let logical = bipartition_measures(p, PairLabel::C1C2R2)?;
    let r1 = pair_gqd(p, PairLabel::C1R1)?;
    let c2 = pair_gqd(p, PairLabel::C1C2)?;
    let r2 = pair_gqd(p, PairLabel::C1R2)?;
    let sq = |m: &MeasureSet<T>| m.d_g1 * m.d_g1;
    Ok(MonogamyReport {
        m3_g1: rest.d_g1 - r1.d_g1 - logical.d_g1,
        m3rho_g1: logical.d_g1 - c2.d_g1 - r2.d_g1,
        m4_g1: rest.d_g1 - r1.d_g1 - c2.d_g1 - r2.d_g1,
        m3_g2: rest.d_g2 - r1.d_g2 - logical.d_g2,
        m3rho_g2: logical.d_g2 - c2.d_g2 - r2.d_g2,
        m4_g2: rest.d_g2 - r1.d_g2 - c2.d_g2 - r2.d_g2,
        m3sq: sq(&rest) - sq(&r1) - sq(&logical),
        m3sq_rho: sq(&logical) - sq(&c2) - sq(&r2),
        m4sq: sq(&rest) - sq(&r1) - sq(&c2) - sq(&r2),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignSummary {
    AlwaysNonNegative,
    AlwaysNonPositive,
    SignChanging,
}

impl SignSummary {
    /// A column within `SIGN_TOL` of zero everywhere counts as nonnegative.
    pub fn of<T: Real>(values: &[T]) -> Self {
        let tol = T::c(SIGN_TOL);
        if values.iter().all(|&v| v >= -tol) {
            SignSummary::AlwaysNonNegative
        } else if values.iter().all(|&v| v <= tol) {
            SignSummary::AlwaysNonPositive
        } else {
            SignSummary::SignChanging
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonogamySweep<T> {
    pub alpha: T,
    pub rows: Vec<(T, MonogamyReport<T>)>,
    /// One flag per entry of [`COLUMNS`].
    pub summary: [SignSummary; 9],
}

impl<T: Real> MonogamySweep<T> {
    pub fn flag(&self, column: &str) -> Option<SignSummary> {
        COLUMNS.iter().position(|c| *c == column).map(|i| self.summary[i])
    }
}

pub fn sweep_reports<T: Real>(alpha: T, kts: &[T]) -> Result<MonogamySweep<T>> {
    if kts.is_empty() {
        return Err(Error::Domain("empty time grid".into()));
    }
    let rows =
        kts.par_iter().map(|&kt| Ok((kt, report(&crate::dynamics::point(alpha, kt)?)?))).collect::<Result<Vec<_>>>()?;
    let summary = std::array::from_fn(|i| {
        let col: Vec<T> = rows.iter().map(|(_, r)| r.values()[i]).collect();
        SignSummary::of(&col)
    });
    Ok(MonogamySweep { alpha, rows, summary })
}

/// `Σ aᵢ |0…1ᵢ…0⟩` with real amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct WStateSpec<T> {
    amps: Vec<T>,
}

impl<T: Real> WStateSpec<T> {
    pub fn new(amps: Vec<T>) -> Result<Self> {
        let n = amps.len();
        if !(2..=MAX_W_QUBITS).contains(&n) {
            return Err(Error::InvalidDimension(n));
        }
        let norm = amps.iter().map(|a| *a * *a).sum::<T>();
        if (norm - T::one()).abs() > T::c(T::TRACE_TOL) {
            return Err(Error::NotNormalized { norm: norm.as_f64() });
        }
        Ok(Self { amps })
    }

    pub fn amplitudes(&self) -> &[T] {
        &self.amps
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn state(&self) -> Result<PureState<T>> {
        let n = self.amps.len();
        let mut v = vec![T::zero(); 1 << n];
        for (i, &a) in self.amps.iter().enumerate() {
            v[1 << (n - 1 - i)] = a;
        }
        PureState::from_real(&v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WStateMonogamy<T> {
    /// `C²(1|rest) − Σⱼ D_g1(ρ₁ⱼ)²`.
    pub deficit: T,
    /// `2|a₁aⱼ|` for `j = 2..n`.
    pub pairwise: Vec<T>,
    /// GQD-1 of the explicitly reduced `ρ₁ⱼ`.
    pub pairwise_explicit: Vec<T>,
    pub bipartite_concurrence: T,
}

impl<T: Real> WStateMonogamy<T> {
    pub fn max_pairwise_gap(&self) -> T {
        self.pairwise.iter().zip(&self.pairwise_explicit).fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()))
    }
}

pub fn w_state_monogamy<T: Real>(w: &WStateSpec<T>) -> Result<WStateMonogamy<T>> {
    let psi = w.state()?;
    let a = w.amplitudes();
    let c = pure_measures(&SchmidtPair::from_marginal(&psi.reduce(&[0])?)?).concurrence;
    let pairwise: Vec<T> = a[1..].iter().map(|aj| T::c(2.0) * (a[0] * *aj).abs()).collect();
    let pairwise_explicit = (1..a.len())
        .map(|j| Ok(gqd_symmetric_x(&x_project(&psi.reduce(&[0, j])?)?)?.d_g1))
        .collect::<Result<Vec<T>>>()?;
    let deficit = c * c - pairwise.iter().map(|v| *v * *v).sum::<T>();
    Ok(WStateMonogamy { deficit, pairwise, pairwise_explicit, bipartite_concurrence: c })
}
