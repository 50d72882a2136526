//! Power-iteration behaviour against an independent dense eigensolver.

use citeweight::fixture::price_1981;
use citeweight::{
    convergence_profile, influence_trace, influence_weights, pinski_narin_normalize, CitationMatrix, IterationMode,
};
use citeweight_testkit as tk;

#[test]
fn deltas_decay_geometrically_at_subdominant_rate() {
    let m = price_1981();
    let trace = influence_trace(&m, true, IterationMode::Fixed(10)).unwrap();
    let profile = convergence_profile(&trace).unwrap();
    assert!(profile.geometric);
    for w in profile.deltas[2..].windows(2) {
        assert!(w[1] < w[0]);
    }
    let nm = pinski_narin_normalize(&m).unwrap();
    let oracle = tk::subdominant_ratio(&nm.values().to_rows());
    let observed = profile.asymptotic_ratio().unwrap();
    assert!((observed - oracle).abs() / oracle <= 0.05, "{observed} vs {oracle}");
}

#[test]
fn normalized_price_matrix_has_unit_spectral_radius() {
    // M = diag(1/R) Z is similar to the column-stochastic Z diag(1/R)
    let nm = pinski_narin_normalize(&price_1981()).unwrap();
    let moduli = tk::eigenvalue_moduli(&nm.values().to_rows());
    assert!((moduli[0] - 1.0).abs() < 1e-12);
}

#[test]
fn converged_weights_are_a_fixed_point() {
    let m = price_1981();
    let w = influence_weights(&m, true, IterationMode::default()).unwrap();
    let nm = pinski_narin_normalize(&m).unwrap();
    let next = nm.values().mul_vec(w.values());
    let total: f64 = next.iter().sum();
    let l1: f64 = next.iter().zip(w.values()).map(|(a, b)| (a / total - b).abs()).sum();
    assert!(l1 <= 1e-9);
}

fn linf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn tolerance_mode_matches_dominant_eigenvector() {
    let mut rng = tk::seeded(0x5eed);
    for _ in 0..100 {
        let n = rand::Rng::random_range(&mut rng, 3..=4usize);
        let counts = tk::random_integer_matrix(&mut rng, n, 1, 500);
        let m = CitationMatrix::from_rows(&tk::as_f64(&counts)).unwrap();
        let iw = influence_weights(&m, true, IterationMode::default()).unwrap();
        let oracle = tk::dominant_eigenvector(&tk::reference_normalized(&tk::as_f64(&counts)));
        let err = linf(iw.values(), &oracle);
        assert!(err <= 1e-8, "{counts:?}: {err}");
    }
}

#[test]
fn twenty_cycles_error_tracks_subdominant_rate() {
    // after k cycles the error is proportional to |lambda_2 / lambda_1|^k
    let mut rng = tk::seeded(0x5eed);
    for _ in 0..100 {
        let n = rand::Rng::random_range(&mut rng, 3..=4usize);
        let counts = tk::random_integer_matrix(&mut rng, n, 1, 500);
        let m = CitationMatrix::from_rows(&tk::as_f64(&counts)).unwrap();
        let iw = influence_weights(&m, true, IterationMode::Fixed(20)).unwrap();
        let nm = tk::reference_normalized(&tk::as_f64(&counts));
        let oracle = tk::dominant_eigenvector(&nm);
        let bound = (2.0 * tk::subdominant_ratio(&nm).powi(20)).max(1e-8);
        let err = linf(iw.values(), &oracle);
        assert!(err <= bound, "{counts:?}: {err} > {bound}");
    }
}
