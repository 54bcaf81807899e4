//! Two cavities `c1, c2` decaying into independent vacuum reservoirs
//! `r1, r2`, starting from `(α|00⟩ + β|11⟩)_{c1c2}`.
//!
//! The joint state stays pure:
//! `|Ψ_t⟩ = α|0000⟩ + β|φ_t⟩_{c1r1}|φ_t⟩_{c2r2}` with
//! `|φ_t⟩ = ξ|10⟩ + χ|01⟩`, `ξ = e^{−κt/2}`, `χ = √(1 − e^{−κt})`.
//! Every two-qubit marginal is an X state with one vanishing coherence, so
//! the closed forms of [`crate::measures`] apply throughout.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::measures::{gqd_symmetric_x, pure_measures, MeasureSet};
use crate::oracle::optimize::golden_section;
use crate::scalar::Real;
use crate::state::{logical_compress, x_project, x_spectral, PureState, SchmidtPair, XState};

/// Qubit positions in the four-party register.
pub const C1: usize = 0;
pub const R1: usize = 1;
pub const C2: usize = 2;
pub const R2: usize = 3;

/// Lower end of the time window searched for sudden changes; excludes the
/// trivial root at `κt = 0`.
pub const SCAN_START: f64 = 1e-8;
pub const SCAN_END: f64 = 12.0;
pub const SCAN_POINTS: usize = 2000;
pub const ROOT_TOL: f64 = 1e-10;
/// Roots closer than this are reported once (tangent crossings).
pub const ROOT_MERGE: f64 = 1e-6;
pub const REVIVAL_POINTS: usize = 4000;
/// Golden-section cannot place a smooth minimum closer than about `√ε`.
pub const REVIVAL_MARGIN: f64 = 1e-7;
pub const BOUNDARY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DynamicsPoint<T> {
    pub alpha: T,
    pub beta: T,
    /// Scaled time `κt`.
    pub kt: T,
    pub xi: T,
    pub chi: T,
}

pub fn point<T: Real>(alpha: T, kt: T) -> Result<DynamicsPoint<T>> {
    if !(alpha >= T::zero() && alpha <= T::one()) {
        return Err(Error::Domain(format!("alpha = {alpha} outside [0, 1]")));
    }
    if !(kt >= T::zero()) {
        return Err(Error::Domain(format!("kappa*t = {kt} is negative")));
    }
    let half = T::c(0.5);
    Ok(DynamicsPoint {
        alpha,
        beta: (T::one() - alpha * alpha).sqrt(),
        kt,
        xi: (-kt * half).exp(),
        chi: (-(-kt).exp_m1()).sqrt(),
    })
}

impl<T: Real> DynamicsPoint<T> {
    /// The same point with `ξ` and `χ` exchanged; `kt` is the time at which
    /// the exchanged amplitudes occur (infinite when `χ = 0`).
    pub fn swapped(&self) -> Self {
        Self { xi: self.chi, chi: self.xi, kt: -T::c(2.0) * self.chi.ln(), ..*self }
    }
}

/// Subsystems whose correlations are tracked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairLabel {
    C1C2,
    R1R2,
    C1R1,
    C1R2,
    /// `c1` against the logical qubit `c2r2`.
    C1C2R2,
    /// `c1` against the rest of the pure four-party state.
    C1Rest,
}

impl PairLabel {
    pub const TWO_QUBIT: [PairLabel; 4] = [PairLabel::C1C2, PairLabel::R1R2, PairLabel::C1R1, PairLabel::C1R2];

    pub fn as_str(self) -> &'static str {
        match self {
            PairLabel::C1C2 => "c1c2",
            PairLabel::R1R2 => "r1r2",
            PairLabel::C1R1 => "c1r1",
            PairLabel::C1R2 => "c1r2",
            PairLabel::C1C2R2 => "c1_c2r2",
            PairLabel::C1Rest => "c1_rest",
        }
    }

    /// Register positions of a physical two-qubit pair.
    pub fn qubits(self) -> Option<[usize; 2]> {
        match self {
            PairLabel::C1C2 => Some([C1, C2]),
            PairLabel::R1R2 => Some([R1, R2]),
            PairLabel::C1R1 => Some([C1, R1]),
            PairLabel::C1R2 => Some([C1, R2]),
            _ => None,
        }
    }
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PairLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [PairLabel::C1C2, PairLabel::R1R2, PairLabel::C1R1, PairLabel::C1R2, PairLabel::C1C2R2, PairLabel::C1Rest]
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown pair label '{s}'")))
    }
}

fn two_qubit(label: PairLabel) -> Result<[usize; 2]> {
    label.qubits().ok_or_else(|| Error::Domain(format!("{label} is not a two-qubit pair")))
}

/// `|Ψ_t⟩` on `(c1, r1, c2, r2)`.
pub fn output_state<T: Real>(p: &DynamicsPoint<T>) -> Result<PureState<T>> {
    let mut amps = vec![Complex::new(T::zero(), T::zero()); 16];
    let b = p.beta;
    amps[0] = Complex::new(p.alpha, T::zero());
    // (c1 r1, c2 r2) = (10, 10), (10, 01), (01, 10), (01, 01)
    amps[0b1010] = Complex::new(b * p.xi * p.xi, T::zero());
    amps[0b1001] = Complex::new(b * p.xi * p.chi, T::zero());
    amps[0b0110] = Complex::new(b * p.chi * p.xi, T::zero());
    amps[0b0101] = Complex::new(b * p.chi * p.chi, T::zero());
    PureState::new(amps)
}

/// Cavity-pair marginal in closed form.
pub fn c1c2_closed<T: Real>(p: &DynamicsPoint<T>) -> Result<XState<T>> {
    let (a, b, x, c) = (p.alpha, p.beta, p.xi, p.chi);
    let b2 = b * b;
    let mid = b2 * x * x * c * c;
    XState::real(a * a + b2 * c.powi(4), mid, mid, b2 * x.powi(4), T::zero(), a * b * x * x)
}

/// Two-qubit marginal: closed forms for the cavity and reservoir pairs, the
/// partial trace of [`output_state`] for the mixed pairs.
pub fn pair_density<T: Real>(p: &DynamicsPoint<T>, label: PairLabel) -> Result<XState<T>> {
    match label {
        PairLabel::C1C2 => c1c2_closed(p),
        PairLabel::R1R2 => c1c2_closed(&p.swapped()),
        PairLabel::C1R1 | PairLabel::C1R2 => x_project(&output_state(p)?.reduce(&two_qubit(label)?)?),
        _ => Err(Error::Domain(format!("{label} is not a two-qubit pair"))),
    }
}

/// GQD-1 of a two-qubit pair: the first singular value `|γ1|`.
pub fn pair_gqd1_closed<T: Real>(p: &DynamicsPoint<T>, label: PairLabel) -> Result<T> {
    let two = T::c(2.0);
    let (a, b, x, c) = (p.alpha, p.beta, p.xi, p.chi);
    match label {
        PairLabel::C1C2 => Ok(two * a * b * x * x),
        PairLabel::R1R2 => Ok(two * a * b * c * c),
        PairLabel::C1R1 => Ok(two * b * b * x * c),
        PairLabel::C1R2 => Ok(two * a * b * x * c),
        _ => Err(Error::Domain(format!("{label} is not a two-qubit pair"))),
    }
}

pub fn pair_gqd<T: Real>(p: &DynamicsPoint<T>, label: PairLabel) -> Result<MeasureSet<T>> {
    let d_g1 = pair_gqd1_closed(p, label)?;
    let m = gqd_symmetric_x(&pair_density(p, label)?)?;
    Ok(MeasureSet { d_g1, ..m })
}

/// Logical basis `{|00⟩, |φ_t⟩}` of the `c2r2` subsystem.
pub fn logical_basis<T: Real>(p: &DynamicsPoint<T>) -> [[Complex<T>; 4]; 2] {
    let z = Complex::new(T::zero(), T::zero());
    [
        [Complex::new(T::one(), T::zero()), z, z, z],
        [z, Complex::new(p.chi, T::zero()), Complex::new(p.xi, T::zero()), z],
    ]
}

/// Measures across the `c1 | c2r2` (mixed, logical qubit) and
/// `c1 | r1c2r2` (pure) bipartitions.
pub fn bipartition_measures<T: Real>(p: &DynamicsPoint<T>, label: PairLabel) -> Result<MeasureSet<T>> {
    let psi = output_state(p)?;
    match label {
        PairLabel::C1C2R2 => {
            let rho = psi.reduce(&[C1, C2, R2])?;
            let basis = logical_basis(p);
            gqd_symmetric_x(&logical_compress(&rho, [&basis[0], &basis[1]])?)
        }
        PairLabel::C1Rest => Ok(pure_measures(&SchmidtPair::from_marginal(&psi.reduce(&[C1])?)?)),
        _ => Err(Error::Domain(format!("{label} is not a bipartition label"))),
    }
}

pub fn bipartition_gqd1<T: Real>(p: &DynamicsPoint<T>, label: PairLabel) -> Result<T> {
    Ok(bipartition_measures(p, label)?.d_g1)
}

/// `γ1² − (γ3² + x3²)`: GQD-2 switches branch where this changes sign.
pub fn sudden_change_gap<T: Real>(p: &DynamicsPoint<T>, label: PairLabel) -> Result<T> {
    let s = x_spectral(&pair_density(p, label)?);
    Ok(s.gamma1 * s.gamma1 - (s.gamma3 * s.gamma3 + s.x3 * s.x3))
}

fn open_unit<T: Real>(alpha: T) -> Result<()> {
    if alpha > T::zero() && alpha < T::one() {
        Ok(())
    } else {
        Err(Error::Domain(format!("alpha = {alpha} outside (0, 1)")))
    }
}

fn bisect<T: Real, F: Fn(T) -> Result<T>>(f: &F, mut lo: T, mut hi: T, tol: T) -> Result<T> {
    let mut flo = f(lo)?;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = (lo + hi) * T::c(0.5);
        let fm = f(mid)?;
        if fm == T::zero() {
            return Ok(mid);
        }
        if (fm < T::zero()) == (flo < T::zero()) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) * T::c(0.5))
}

/// Interior times in `(SCAN_START, SCAN_END]` where the GQD-2 of `label`
/// changes branch. Sign changes on a uniform grid are bracketed; grid-level
/// extrema that stay on one side of zero are refined by golden-section search
/// to catch pairs of close roots.
pub fn sudden_change_roots<T: Real>(alpha: T, label: PairLabel) -> Result<Vec<T>> {
    open_unit(alpha)?;
    two_qubit(label)?;
    let gap = |kt: T| sudden_change_gap(&point(alpha, kt)?, label);
    let (start, end) = (T::c(SCAN_START), T::c(SCAN_END));
    let step = (end - start) / T::c((SCAN_POINTS - 1) as f64);
    let kts: Vec<T> = (0..SCAN_POINTS).map(|i| start + step * T::c(i as f64)).collect();
    let h = kts.iter().map(|&k| gap(k)).collect::<Result<Vec<T>>>()?;

    let mut brackets: Vec<(T, T)> = Vec::new();
    let mut roots: Vec<T> = Vec::new();
    for i in 0..SCAN_POINTS - 1 {
        if h[i] == T::zero() {
            roots.push(kts[i]);
        } else if h[i] * h[i + 1] < T::zero() {
            brackets.push((kts[i], kts[i + 1]));
        }
    }
    let refine_tol = T::c(ROOT_TOL);
    for i in 1..SCAN_POINTS - 1 {
        let peak = h[i] < T::zero() && h[i] >= h[i - 1] && h[i] >= h[i + 1];
        let dip = h[i] > T::zero() && h[i] <= h[i - 1] && h[i] <= h[i + 1];
        if !(peak || dip) {
            continue;
        }
        let sign = if peak { -T::one() } else { T::one() };
        // minimize sign·h: finds the maximum of h for a peak, minimum for a dip
        let (k_ext, v) =
            golden_section(|k| gap(k).map(|g| sign * g).unwrap_or(T::infinity()), kts[i - 1], kts[i + 1], refine_tol);
        if v < T::zero() {
            brackets.push((kts[i - 1], k_ext));
            brackets.push((k_ext, kts[i + 1]));
        }
    }
    for (lo, hi) in brackets {
        roots.push(bisect(&gap, lo, hi, refine_tol)?);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let mut merged: Vec<T> = Vec::with_capacity(roots.len());
    for r in roots {
        match merged.last() {
            Some(&last) if r - last < T::c(ROOT_MERGE) => {}
            _ => merged.push(r),
        }
    }
    Ok(merged)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EvolutionType {
    /// Two sudden changes with a revival in between.
    I,
    /// Sudden changes without revival.
    II,
    /// Asymptotic evolution, no sudden change.
    III,
}

impl fmt::Display for EvolutionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvolutionType::I => "I",
            EvolutionType::II => "II",
            EvolutionType::III => "III",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionClass<T> {
    pub kind: EvolutionType,
    pub sudden_changes: Vec<T>,
    /// Time of the interior GQD-2 minimum, when there is one.
    pub revival: Option<T>,
}

impl<T> EvolutionClass<T> {
    pub fn has_revival(&self) -> bool {
        self.revival.is_some()
    }
}

/// Interior minimum of the cavity-pair GQD-2 between two sudden changes.
/// The grid minimum is refined by golden-section search and accepted when it
/// lies more than `REVIVAL_MARGIN` inside the interval and below both ends.
fn find_revival<T: Real>(alpha: T, from: T, to: T) -> Result<Option<T>> {
    let dg2 = |kt: T| -> Result<T> { Ok(pair_gqd(&point(alpha, kt)?, PairLabel::C1C2)?.d_g2) };
    let step = (to - from) / T::c((REVIVAL_POINTS - 1) as f64);
    let kts: Vec<T> = (0..REVIVAL_POINTS).map(|i| from + step * T::c(i as f64)).collect();
    let v = kts.iter().map(|&k| dg2(k)).collect::<Result<Vec<T>>>()?;
    let i = (0..REVIVAL_POINTS).fold(0, |best, j| if v[j] < v[best] { j } else { best });
    let (lo, hi) = (kts[i.saturating_sub(1)], kts[(i + 1).min(REVIVAL_POINTS - 1)]);
    let (k, fk) = golden_section(|k| dg2(k).unwrap_or(T::infinity()), lo, hi, T::c(ROOT_TOL));
    let margin = T::c(REVIVAL_MARGIN);
    let interior = k - from > margin && to - k > margin;
    Ok((interior && fk < v[0] && fk < v[REVIVAL_POINTS - 1]).then_some(k))
}

pub fn classify<T: Real>(alpha: T) -> Result<EvolutionClass<T>> {
    let roots = sudden_change_roots(alpha, PairLabel::C1C2)?;
    let revival = if roots.len() >= 2 { find_revival(alpha, roots[0], roots[roots.len() - 1])? } else { None };
    let kind = match (roots.len(), revival.is_some()) {
        (n, true) if n >= 2 => EvolutionType::I,
        (0, _) => EvolutionType::III,
        _ => EvolutionType::II,
    };
    Ok(EvolutionClass { kind, sudden_changes: roots, revival })
}

/// Initial amplitudes at which the evolution type changes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseBoundaries<T> {
    /// Type I → II: the revival disappears.
    pub alpha_revival: T,
    /// Type II → III: the sudden changes disappear.
    pub alpha_sudden: T,
}

/// Brackets known to straddle each transition.
pub const REVIVAL_BRACKET: (f64, f64) = (0.4, 0.65);
pub const SUDDEN_BRACKET: (f64, f64) = (0.65, 0.9);

fn bisect_predicate<T: Real, F: Fn(T) -> Result<bool>>(pred: F, lo: f64, hi: f64) -> Result<T> {
    let (mut lo, mut hi) = (T::c(lo), T::c(hi));
    let (at_lo, at_hi) = (pred(lo)?, pred(hi)?);
    if at_lo == at_hi {
        return Err(Error::Domain(format!("predicate does not change between {lo} and {hi}")));
    }
    for _ in 0..200 {
        if hi - lo <= T::c(BOUNDARY_TOL) {
            break;
        }
        let mid = (lo + hi) * T::c(0.5);
        if pred(mid)? == at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) * T::c(0.5))
}

pub fn boundary_scan<T: Real>() -> Result<PhaseBoundaries<T>> {
    let alpha_revival =
        bisect_predicate(|a: T| Ok(classify(a)?.kind == EvolutionType::I), REVIVAL_BRACKET.0, REVIVAL_BRACKET.1)?;
    let alpha_sudden = bisect_predicate(
        |a: T| Ok(!sudden_change_roots(a, PairLabel::C1C2)?.is_empty()),
        SUDDEN_BRACKET.0,
        SUDDEN_BRACKET.1,
    )?;
    Ok(PhaseBoundaries { alpha_revival, alpha_sudden })
}
