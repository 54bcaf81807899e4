use std::f64::consts::{FRAC_1_SQRT_2, LN_2};

use proptest::prelude::*;

use gqd::dynamics::{
    bipartition_measures, boundary_scan, classify, output_state, pair_density, pair_gqd, point, sudden_change_roots,
    EvolutionType, PairLabel,
};
use gqd::measures::gqd_symmetric_x;
use gqd::state::x_project;

/// Branch-switch function of the cavity pair written directly in `α, κt`:
/// `γ1² − γ3² − x3²` with `γ1 = 2αβξ²`, `γ3 = 1 − 4β²ξ²χ²`, `x3 = 1 − 2β²ξ²`.
fn gap_direct(alpha: f64, kt: f64) -> f64 {
    let b2 = 1.0 - alpha * alpha;
    let s = (-kt).exp();
    let g1 = 2.0 * alpha * b2.sqrt() * s;
    let g3 = 1.0 - 4.0 * b2 * s * (1.0 - s);
    let x3 = 1.0 - 2.0 * b2 * s;
    g1 * g1 - g3 * g3 - x3 * x3
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) == (flo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn single_root_matches_independent_bisection() {
    let expected = bisect(|k| gap_direct(FRAC_1_SQRT_2, k), 0.2, 0.7);
    assert!((expected - 0.434175015).abs() < 1e-8);
    let roots = sudden_change_roots(FRAC_1_SQRT_2, PairLabel::C1C2).unwrap();
    assert_eq!(roots.len(), 1);
    assert!((roots[0] - expected).abs() < 1e-8, "{roots:?} vs {expected}");
}

#[test]
fn two_roots_match_independent_bisection() {
    let roots = sudden_change_roots(0.4, PairLabel::C1C2).unwrap();
    assert_eq!(roots.len(), 2);
    let r0 = bisect(|k| gap_direct(0.4, k), 0.05, LN_2);
    let r1 = bisect(|k| gap_direct(0.4, k), LN_2, 2.0);
    assert!((roots[0] - r0).abs() < 1e-8 && (roots[1] - r1).abs() < 1e-8);
    assert!((r0 - 0.21643).abs() < 1e-4 && (r1 - 0.83077).abs() < 1e-4);
}

#[test]
fn revival_sits_at_half_population() {
    for a in [0.1, 0.3, 0.5, 0.57] {
        let c = classify(a).unwrap();
        assert_eq!(c.kind, EvolutionType::I, "alpha {a}");
        assert!((c.revival.unwrap() - LN_2).abs() < 1e-6);
    }
}

#[test]
fn classification_changes_across_boundaries() {
    let b = boundary_scan::<f64>().unwrap();
    assert!((b.alpha_revival - 1.0 / 3f64.sqrt()).abs() < 1e-5);
    assert!((b.alpha_sudden - 0.7647147349).abs() < 1e-5);
    assert_eq!(classify(b.alpha_revival - 1e-4).unwrap().kind, EvolutionType::I);
    assert_eq!(classify(b.alpha_revival + 1e-4).unwrap().kind, EvolutionType::II);
    assert_eq!(classify(b.alpha_sudden - 1e-4).unwrap().kind, EvolutionType::II);
    assert_eq!(classify(b.alpha_sudden + 1e-4).unwrap().kind, EvolutionType::III);
}

#[test]
fn type_sequence_is_monotone() {
    let kinds: Vec<EvolutionType> = (2..=19).map(|i| classify(i as f64 * 0.05).unwrap().kind).collect();
    assert!(kinds.windows(2).all(|w| w[0] <= w[1]), "{kinds:?}");
}

#[test]
fn reservoir_pairs_start_uncorrelated() {
    let p = point(0.3f64, 0.0).unwrap();
    for l in [PairLabel::R1R2, PairLabel::C1R1, PairLabel::C1R2] {
        let m = pair_gqd(&p, l).unwrap();
        assert_eq!(m.d_g1, 0.0);
        assert!(m.d_g2.abs() < 1e-15 && m.concurrence == 0.0);
    }
}

#[test]
fn pure_bipartition_value() {
    let m = bipartition_measures(&point(FRAC_1_SQRT_2, LN_2).unwrap(), PairLabel::C1Rest).unwrap();
    assert!((m.d_g1 - 0.75f64.sqrt()).abs() < 1e-12);
    assert!((m.d_g2 - 0.75).abs() < 1e-12);
}

#[test]
fn domain_errors() {
    assert!(point(-0.1, 1.0).is_err());
    assert!(point(0.5, f64::NAN).is_err());
    assert!(sudden_change_roots(0.0, PairLabel::C1C2).is_err());
    assert!(classify(1.0).is_err());
}

#[test]
fn single_precision_trajectory() {
    let p = point(0.6f32, 0.5).unwrap();
    let m32 = pair_gqd(&p, PairLabel::C1C2).unwrap();
    let m64 = pair_gqd(&point(0.6f64, 0.5).unwrap(), PairLabel::C1C2).unwrap();
    assert!((m32.d_g2 as f64 - m64.d_g2).abs() < 1e-5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn marginals_match_partial_traces(a in 0.01..0.99f64, kt in 0.0..8.0f64) {
        let p = point(a, kt).unwrap();
        let psi = output_state(&p).unwrap();
        prop_assert!((psi.norm() - 1.0).abs() < 1e-14);
        for l in PairLabel::TWO_QUBIT {
            let explicit = x_project(&psi.reduce(&l.qubits().unwrap()).unwrap()).unwrap();
            let closed = pair_density(&p, l).unwrap();
            prop_assert!(explicit.to_matrix().max_abs_diff(&closed.to_matrix()) < 1e-14);
            let m = gqd_symmetric_x(&explicit).unwrap();
            let c = pair_gqd(&p, l).unwrap();
            prop_assert!((m.d_g1 - c.d_g1).abs() < 1e-12);
        }
    }

    #[test]
    fn hierarchy_along_trajectory(a in 0.01..0.99f64, kt in 0.0..8.0f64) {
        let p = point(a, kt).unwrap();
        for l in PairLabel::TWO_QUBIT.into_iter().chain([PairLabel::C1C2R2]) {
            let m = if l == PairLabel::C1C2R2 { bipartition_measures(&p, l).unwrap() } else { pair_gqd(&p, l).unwrap() };
            prop_assert!(m.d_g1 * m.d_g1 - m.d_g2 >= -1e-12);
            prop_assert!(m.d_g1 >= m.concurrence - 1e-12);
        }
    }

    #[test]
    fn logical_qubit_gqd1(a in 0.01..0.99f64, kt in 0.0..8.0f64) {
        let p = point(a, kt).unwrap();
        let m = bipartition_measures(&p, PairLabel::C1C2R2).unwrap();
        prop_assert!((m.d_g1 - 2.0 * a * p.beta * p.xi).abs() < 1e-12);
    }
}
