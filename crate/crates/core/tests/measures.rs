use num_complex::Complex;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gqd::measures::{concurrence_x, gqd1_x, gqd2_closed, gqd_symmetric_x, measure_x, pure_measures};
use gqd::sampling::{random_bell_diagonal, random_density, random_symmetric_x, random_unitary_2, random_x_state};
use gqd::state::{bloch_decompose, DensityMatrix, SchmidtPair, XState};

/// GQD-2 of an X state from its entries: the correlation matrix is diagonal
/// after removing the coherence phases, so `K = diag(T11², T22², T33² + x3²)`.
fn gqd2_x_entries(x: &XState<f64>) -> f64 {
    let (a, b) = (x.rho41.norm(), x.rho32.norm());
    let t11 = 2.0 * (b + a);
    let t22 = 2.0 * (b - a);
    let t33 = x.rho11 - x.rho22 - x.rho33 + x.rho44;
    let x3 = x.rho11 + x.rho22 - x.rho33 - x.rho44;
    let k = [t11 * t11, t22 * t22, t33 * t33 + x3 * x3];
    (k.iter().sum::<f64>() - k.iter().cloned().fold(0.0, f64::max)) / 2.0
}

#[test]
fn frozen_values() {
    // values below were computed by hand from the entries
    let x = XState::real(0.4f64, 0.1, 0.2, 0.3, 0.0, 0.25).unwrap();
    let m = gqd_symmetric_x(&x).unwrap();
    assert!((m.d_g1 - 0.5).abs() < 1e-15);
    // x3 = 0 and γ3² = 0.16 < γ1² = 0.25
    assert!((m.d_g2 - 0.205).abs() < 1e-15);
    assert!((m.concurrence - (0.5 - 2.0 * 0.02f64.sqrt())).abs() < 1e-15);
    assert!((gqd2_x_entries(&x) - 0.205).abs() < 1e-15);

    let werner = XState::real(0.4f64, 0.1, 0.1, 0.4, 0.0, 0.3).unwrap();
    let m = measure_x(&werner).unwrap();
    assert!((m.d_g1 - 0.6).abs() < 1e-15 && (m.d_g2 - 0.36).abs() < 1e-15 && (m.concurrence - 0.4).abs() < 1e-15);
}

#[test]
fn general_x_state_value() {
    // both coherences present: γ1 = 0.6, γ2 = -0.2, γ3 = 0.2, x3 = 0
    let x = XState::real(0.3, 0.2, 0.2, 0.3, 0.1, 0.2).unwrap();
    let (g1s, g2s, gmin, gmax) = (0.36f64, 0.04f64, 0.04f64, 0.04f64);
    let expect = ((g1s * gmax - g2s * gmin) / (gmax - gmin + g1s - g2s)).sqrt();
    assert!((gqd1_x(&x) - expect).abs() < 1e-15);
}

#[test]
fn pure_state_examples() {
    let m = pure_measures(&SchmidtPair::new(0.5f64, 0.5).unwrap());
    assert_eq!((m.d_g1, m.d_g2), (1.0, 1.0));
    assert!(SchmidtPair::new(0.7f64, 0.7).is_err());
}

#[test]
fn measure_set_json_keys() {
    let m = measure_x(&XState::real(0.5, 0.0, 0.0, 0.5, 0.0, 0.5).unwrap()).unwrap();
    let v: serde_json::Value = serde_json::to_value(m).unwrap();
    assert_eq!(v["dg1"], 1.0);
    assert_eq!(v["dg2"], 1.0);
    assert_eq!(v["concurrence"], 1.0);
}

#[test]
fn single_precision_agrees() {
    let x64 = XState::real(0.4, 0.1, 0.2, 0.3, 0.0, 0.25).unwrap();
    let x32 = XState::<f32>::real(0.4, 0.1, 0.2, 0.3, 0.0, 0.25).unwrap();
    let (a, b) = (gqd_symmetric_x(&x64).unwrap(), gqd_symmetric_x(&x32).unwrap());
    assert!((a.d_g2 - b.d_g2 as f64).abs() < 1e-6);
    assert!((a.concurrence - b.concurrence as f64).abs() < 1e-6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn symmetric_hierarchy(seed in any::<u64>()) {
        let x = random_symmetric_x::<f64, _>(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let m = gqd_symmetric_x(&x).unwrap();
        prop_assert!(m.d_g1 * m.d_g1 - m.d_g2 >= -1e-12);
        prop_assert!(m.d_g1 >= m.concurrence - 1e-12);
        prop_assert!((m.d_g1 - gqd1_x(&x)).abs() < 1e-15);
        prop_assert!((m.concurrence - concurrence_x(&x)).abs() < 1e-12);
        prop_assert!((m.d_g2 - gqd2_x_entries(&x)).abs() < 1e-12);
    }

    #[test]
    fn bloch_path_matches_entries(seed in any::<u64>()) {
        let x = random_x_state::<f64, _>(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let d2 = gqd2_closed(&bloch_decompose(&x.to_density().unwrap()).unwrap()).unwrap();
        prop_assert!((d2 - gqd2_x_entries(&x)).abs() < 1e-12);
    }

    #[test]
    fn bell_diagonal_hierarchy(seed in any::<u64>()) {
        let x = random_bell_diagonal::<f64, _>(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let m = measure_x(&x).unwrap();
        prop_assert!(m.d_g1 * m.d_g1 - m.d_g2 >= -1e-12);
        prop_assert!(m.d_g1 >= m.concurrence - 1e-12);
    }

    #[test]
    fn measures_in_unit_interval(seed in any::<u64>()) {
        let x = random_x_state::<f64, _>(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let m = measure_x(&x).unwrap();
        for v in [m.d_g1, m.d_g2, m.concurrence] {
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&v));
        }
    }

    #[test]
    fn gqd2_invariant_under_local_unitaries(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = random_density::<f64, _>(&mut rng, 4).unwrap();
        let u = random_unitary_2::<f64, _>(&mut rng).kron(&random_unitary_2(&mut rng));
        let a = gqd2_closed(&bloch_decompose(&rho).unwrap()).unwrap();
        let b = gqd2_closed(&bloch_decompose(&rho.conjugate(&u).unwrap()).unwrap()).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn gqd1_phase_invariant(seed in any::<u64>(), p1 in 0.0..std::f64::consts::TAU, p2 in 0.0..std::f64::consts::TAU) {
        let x = random_x_state::<f64, _>(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let rotated = XState::new(
            x.rho11, x.rho22, x.rho33, x.rho44,
            x.rho32 * Complex::from_polar(1.0, p1),
            x.rho41 * Complex::from_polar(1.0, p2),
        ).unwrap();
        prop_assert!((gqd1_x(&x) - gqd1_x(&rotated)).abs() < 1e-12);
    }

    #[test]
    fn pure_saturation(l in 0.0..=1.0f64) {
        let s = SchmidtPair::new(l, 1.0 - l).unwrap();
        let m = pure_measures(&s);
        let c = 2.0 * (l * (1.0 - l)).sqrt();
        prop_assert!((m.d_g1 - c).abs() < 1e-15 && (m.concurrence - c).abs() < 1e-15);
        prop_assert!((m.d_g2 - c * c).abs() < 1e-15);
        let psi = gqd::state::PureState::from_real(&[l.sqrt(), 0.0, 0.0, (1.0 - l).sqrt()]).unwrap();
        let rho = DensityMatrix::from_pure(&psi).unwrap();
        let d2 = gqd2_closed(&bloch_decompose(&rho).unwrap()).unwrap();
        prop_assert!((d2 - c * c).abs() < 1e-12);
    }
}
