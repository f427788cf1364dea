//! Random states and unitaries for property tests, benchmarks and demos.
//!
//! All samplers take the generator explicitly; nothing here touches a
//! global RNG.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{ComplexMatrix, ZERO};
use crate::state::{DensityMatrix, PureState, UnitaryOperator};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state on `n_qubits` qubits.
pub fn pure_state<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> PureState {
    let amps = (0..1usize << n_qubits).map(|_| gaussian(rng)).collect();
    PureState::normalized(amps).expect("gaussian vector is nonzero")
}

/// Full-rank random density matrix `G G† / tr(G G†)` with Ginibre `G`.
pub fn density_matrix<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> DensityMatrix {
    let d = 1usize << n_qubits;
    let data = (0..d * d).map(|_| gaussian(rng)).collect();
    let g = ComplexMatrix::from_vec(d, d, data).unwrap();
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    DensityMatrix::from_trusted(w.scale_real(1.0 / tr).hermitian_part())
}

/// Mixture of `rank` Haar-random pure states with random weights.
pub fn low_rank_density<R: Rng + ?Sized>(n_qubits: usize, rank: usize, rng: &mut R) -> DensityMatrix {
    let d = 1usize << n_qubits;
    let weights: Vec<f64> = (0..rank).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let mut acc = ComplexMatrix::zeros(d, d);
    for w in weights {
        let psi = pure_state(n_qubits, rng);
        acc = &acc + &psi.projector().matrix().scale_real(w / total);
    }
    DensityMatrix::from_trusted(acc.hermitian_part())
}

/// Haar-random unitary by Gram–Schmidt on a Ginibre matrix.
pub fn unitary<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> UnitaryOperator {
    let d = 1usize << n_qubits;
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    while cols.len() < d {
        let mut v: Vec<Complex64> = (0..d).map(|_| gaussian(rng)).collect();
        // twice is enough for orthogonality to working precision
        for _ in 0..2 {
            for q in &cols {
                let proj: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= proj * qi;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    let mut m = ComplexMatrix::zeros(d, d);
    for (j, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            m[(i, j)] = z;
        }
    }
    debug_assert!(m.as_slice().iter().any(|&z| z != ZERO));
    UnitaryOperator::new(m).expect("Gram-Schmidt output is unitary")
}
