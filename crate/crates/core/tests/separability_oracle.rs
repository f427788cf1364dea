mod common;

use nmrsim_core::random;
use nmrsim_core::separability::{partial_transpose_qubits, DEFAULT_PPT_TOL};
use nmrsim_core::state::{bell_states, evolve};
use nmrsim_core::{compose_pseudopure, critical_epsilon, is_separable_2q, partial_transpose, Subsystem};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn closed_form_matches_bisection(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho1 = random::pure_state(2, &mut rng).projector();
        let closed = critical_epsilon(&rho1).unwrap();
        let oracle = common::bisection_critical_epsilon(rho1.matrix());
        prop_assert!((closed - oracle).abs() <= 1e-9, "closed {closed} oracle {oracle}");
    }

    #[test]
    fn critical_epsilon_is_local_unitary_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho1 = random::pure_state(2, &mut rng).projector();
        let local = random::unitary(1, &mut rng).tensor(&random::unitary(1, &mut rng));
        let moved = evolve(&rho1, &local).unwrap();
        prop_assert!((critical_epsilon(&rho1).unwrap() - critical_epsilon(&moved).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn partial_transpose_is_an_involution(seed in any::<u64>(), n in 2usize..=3, mask in 1u8..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = random::density_matrix(n, &mut rng);
        let qubits: Vec<usize> = (0..n).filter(|q| mask & (1 << q) != 0).collect();
        let once = partial_transpose_qubits(rho.matrix(), n, &qubits);
        prop_assert_eq!(once.trace(), rho.matrix().trace());
        prop_assert!(once.hermiticity_defect() <= 1e-15);
        prop_assert_eq!(&partial_transpose_qubits(&once, n, &qubits), rho.matrix());
    }

    #[test]
    fn library_partial_transpose_matches_index_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = random::density_matrix(2, &mut rng);
        prop_assert_eq!(partial_transpose(&rho, Subsystem::B).unwrap(), common::partial_transpose_b(rho.matrix()));
    }
}

#[test]
fn ppt_is_monotone_in_epsilon() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut targets = vec![bell_states()[0].projector()];
    targets.extend((0..4).map(|_| random::pure_state(2, &mut rng).projector()));
    for rho1 in targets {
        let star = critical_epsilon(&rho1).unwrap();
        for k in 0..=100 {
            let eps = k as f64 / 100.0;
            let report = is_separable_2q(&compose_pseudopure(eps, &rho1).unwrap(), DEFAULT_PPT_TOL).unwrap();
            if eps <= star {
                assert!(report.is_ppt, "eps {eps} <= {star} should be PPT");
            } else if eps > star + 1e-9 {
                assert!(!report.is_ppt, "eps {eps} > {star} should not be PPT");
            }
        }
    }
}

#[test]
fn werner_threshold() {
    let bell = bell_states()[0].projector();
    let closed = critical_epsilon(&bell).unwrap();
    let oracle = common::bisection_critical_epsilon(bell.matrix());
    assert!((closed - 1.0 / 3.0).abs() <= 1e-9);
    assert!((oracle - 1.0 / 3.0).abs() <= 1e-9);
    let at = |eps| is_separable_2q(&compose_pseudopure(eps, &bell).unwrap(), DEFAULT_PPT_TOL).unwrap();
    assert!(at(0.32).is_ppt);
    assert!(!at(0.35).is_ppt);
}
