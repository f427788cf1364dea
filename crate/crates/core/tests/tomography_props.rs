mod common;

use nmrsim_core::random;
use nmrsim_core::tomography::{nearest_density, pauli_labels, project_simplex};
use nmrsim_core::{
    fidelity, pauli_expectations, project_psd, reconstruct_linear, simulate_shot_noise, ComplexMatrix, ShotNoiseConfig,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn unit_trace_hermitian(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    // a random density matrix pushed off the PSD cone but kept at trace one
    let rho = random::density_matrix(n, rng);
    let d = 1usize << n;
    let noise = random::density_matrix(n, rng);
    let shift = ComplexMatrix::identity(d).scale_real(1.0 / d as f64);
    let h = rho.matrix() + &(noise.matrix() - &shift).scale_real(3.0);
    h.hermitian_part()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn exact_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = random::density_matrix(n, &mut rng);
        let back = reconstruct_linear(&pauli_expectations(&rho).unwrap()).unwrap();
        prop_assert!(back.max_abs_diff(rho.matrix()) <= 1e-10);
    }

    #[test]
    fn projection_is_idempotent(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = unit_trace_hermitian(n, &mut rng);
        let once = project_psd(&h).unwrap();
        let twice = project_psd(once.matrix()).unwrap();
        prop_assert!(twice.matrix().max_abs_diff(once.matrix()) <= 1e-12);
    }

    #[test]
    fn projection_is_contractive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = unit_trace_hermitian(2, &mut rng);
        let p = project_psd(&h).unwrap();
        for _ in 0..2 {
            let target = random::low_rank_density(2, rng.random_range(1..=4), &mut rng);
            let before = (&h - target.matrix()).frobenius_norm();
            let after = (p.matrix() - target.matrix()).frobenius_norm();
            prop_assert!(after <= before + 1e-12);
        }
    }

    #[test]
    fn simplex_projection_matches_enumeration(values in prop::collection::vec(-0.5f64..1.0, 1..=8)) {
        let fast = project_simplex(&values);
        let slow = common::brute_force_simplex(&values);
        for (a, b) in fast.iter().zip(&slow) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
    }
}

#[test]
fn small_negative_spectrum_projects_onto_simplex() {
    let h = ComplexMatrix::from_real_diag(&[0.7, 0.5, -0.1, -0.1]);
    let p = project_psd(&h).unwrap();
    let want = common::brute_force_simplex(&[0.7, 0.5, -0.1, -0.1]);
    for (i, w) in want.iter().enumerate() {
        assert!((p.matrix()[(i, i)].re - w).abs() <= 1e-12);
    }
    assert!((p.matrix()[(0, 0)].re - 0.6).abs() <= 1e-12);
    assert!((p.matrix()[(1, 1)].re - 0.4).abs() <= 1e-12);
}

#[test]
fn nearest_density_accepts_any_trace() {
    let h = ComplexMatrix::from_real_diag(&[0.7, 0.5, 0.0, -0.1]);
    assert!(project_psd(&h).is_err());
    let p = nearest_density(&h).unwrap();
    assert!((p.matrix().trace().re - 1.0).abs() <= 1e-12);
}

#[test]
fn noisy_reconstruction_keeps_high_fidelity() {
    let mut passes = 0;
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let rho = random::density_matrix(2, &mut rng);
        let cfg = ShotNoiseConfig {
            shots_per_observable: 100_000,
            seed,
        };
        let recon = reconstruct_linear(&simulate_shot_noise(&rho, &cfg).unwrap()).unwrap();
        if fidelity(&project_psd(&recon).unwrap(), &rho).unwrap() >= 0.99 {
            passes += 1;
        }
    }
    assert!(passes >= 48, "{passes}/50");
}

#[test]
fn million_shots_are_close() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let rho = random::density_matrix(2, &mut rng);
    let exact = pauli_expectations(&rho).unwrap();
    let cfg = ShotNoiseConfig {
        shots_per_observable: 1_000_000,
        seed: 3,
    };
    let noisy = simulate_shot_noise(&rho, &cfg).unwrap();
    for label in pauli_labels(2) {
        assert!((exact.get(&label).unwrap() - noisy.get(&label).unwrap()).abs() < 0.01);
    }
}

#[test]
fn shot_noise_is_deterministic_per_seed() {
    let rho = random::density_matrix(2, &mut ChaCha8Rng::seed_from_u64(5));
    let cfg = ShotNoiseConfig {
        shots_per_observable: 1000,
        seed: 42,
    };
    assert_eq!(
        simulate_shot_noise(&rho, &cfg).unwrap(),
        simulate_shot_noise(&rho, &cfg).unwrap()
    );
}
