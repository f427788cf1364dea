//! Pauli-basis state tomography: expectation values (exact or shot-noise
//! sampled), linear-inversion reconstruction, and projection onto the
//! nearest physical density matrix.
//!
//! Labels are strings over `I X Y Z`; the leftmost character acts on the
//! first (leftmost) tensor factor.
//!
//! Shot noise uses `ChaCha8Rng::seed_from_u64(seed)` from `rand_chacha` and
//! draws one binomial sample per non-identity label in lexicographic label
//! order. The number of `+1` outcomes out of `shots` independent ±1 draws
//! is binomial, so this is the same distribution as drawing every shot.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{eigh, ComplexMatrix};
use crate::state::{gates, DensityMatrix};

pub const MAX_QUBITS: usize = 3;
const PAULI_CHARS: [char; 4] = ['I', 'X', 'Y', 'Z'];
const VALUE_TOL: f64 = 1e-12;
const PROJECTION_INPUT_TOL: f64 = 1e-9;

/// Expectation values `tr(ρ·P)` keyed by Pauli label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawExpectationSet")]
pub struct PauliExpectationSet {
    pub n_qubits: usize,
    pub values: BTreeMap<String, f64>,
}

#[derive(Deserialize)]
struct RawExpectationSet {
    n_qubits: usize,
    values: BTreeMap<String, f64>,
}

impl TryFrom<RawExpectationSet> for PauliExpectationSet {
    type Error = Error;

    fn try_from(raw: RawExpectationSet) -> Result<Self> {
        Self::new(raw.n_qubits, raw.values)
    }
}

impl PauliExpectationSet {
    /// Checks labels and value ranges. Missing labels are allowed here and
    /// rejected by [`reconstruct_linear`].
    pub fn new(n_qubits: usize, values: BTreeMap<String, f64>) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits(n_qubits));
        }
        for (label, &v) in &values {
            if label.chars().count() != n_qubits || !label.chars().all(|c| PAULI_CHARS.contains(&c)) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if v.is_nan() || v.abs() > 1.0 + VALUE_TOL {
                return Err(Error::Malformed(format!("expectation {label} = {v} outside [-1, 1]")));
            }
        }
        let identity = identity_label(n_qubits);
        if let Some(&v) = values.get(&identity) {
            if v != 1.0 {
                return Err(Error::Malformed(format!("identity expectation must be 1, got {v}")));
            }
        }
        Ok(Self { n_qubits, values })
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.values.get(label).copied()
    }
}

fn identity_label(n_qubits: usize) -> String {
    "I".repeat(n_qubits)
}

/// All `4^n` labels in lexicographic order (`II`, `IX`, ..., `ZZ`).
pub fn pauli_labels(n_qubits: usize) -> Vec<String> {
    (0..n_qubits).fold(vec![String::new()], |acc, _| {
        acc.iter()
            .flat_map(|prefix| PAULI_CHARS.iter().map(move |c| format!("{prefix}{c}")))
            .collect()
    })
}

/// The Pauli product named by `label`.
pub fn pauli_operator(label: &str) -> Result<ComplexMatrix> {
    let mut chars = label.chars();
    let single = |c: char| match c {
        'I' => Ok(gates::pauli_i()),
        'X' => Ok(gates::pauli_x()),
        'Y' => Ok(gates::pauli_y()),
        'Z' => Ok(gates::pauli_z()),
        _ => Err(Error::InvalidLabel(label.to_string())),
    };
    let first = chars.next().ok_or_else(|| Error::InvalidLabel(label.to_string()))?;
    chars.try_fold(single(first)?, |acc, c| Ok(acc.kron(&single(c)?)))
}

fn check_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.n_qubits() == 0 || rho.n_qubits() > MAX_QUBITS {
        return Err(Error::TooManyQubits(rho.n_qubits()));
    }
    Ok(())
}

fn expectation(rho: &DensityMatrix, label: &str) -> Result<f64> {
    let z = (rho.matrix() * &pauli_operator(label)?).trace();
    // tr(ρP) is real for Hermitian ρ and P
    debug_assert!(z.im.abs() <= 1e-12, "imaginary expectation {z} for {label}");
    Ok(z.re)
}

/// Exact expectation values for every Pauli product.
pub fn pauli_expectations(rho: &DensityMatrix) -> Result<PauliExpectationSet> {
    check_qubits(rho)?;
    let n = rho.n_qubits();
    let identity = identity_label(n);
    let values = pauli_labels(n)
        .into_iter()
        .map(|label| {
            let v = if label == identity {
                1.0
            } else {
                expectation(rho, &label)?
            };
            Ok((label, v))
        })
        .collect::<Result<_>>()?;
    Ok(PauliExpectationSet { n_qubits: n, values })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShotNoiseConfig {
    pub shots_per_observable: u64,
    pub seed: u64,
}

/// Expectation values estimated from `shots_per_observable` ±1 outcomes each.
pub fn simulate_shot_noise(rho: &DensityMatrix, cfg: &ShotNoiseConfig) -> Result<PauliExpectationSet> {
    if cfg.shots_per_observable == 0 {
        return Err(Error::ZeroShots);
    }
    let exact = pauli_expectations(rho)?;
    let identity = identity_label(exact.n_qubits);
    let shots = cfg.shots_per_observable;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut values = BTreeMap::new();
    for (label, mean) in exact.values {
        if label == identity {
            values.insert(label, 1.0);
            continue;
        }
        let p_plus = ((1.0 + mean) / 2.0).clamp(0.0, 1.0);
        let plus = Binomial::new(shots, p_plus)
            .map_err(|e| Error::NumericalFailure(format!("binomial({shots}, {p_plus}): {e}")))?
            .sample(&mut rng);
        let v = (2.0 * plus as f64 - shots as f64) / shots as f64;
        values.insert(label, v);
    }
    Ok(PauliExpectationSet {
        n_qubits: exact.n_qubits,
        values,
    })
}

/// Linear inversion `ρ̂ = (1/d)·Σ_P value[P]·P`.
///
/// Hermitian with unit trace by construction, but not necessarily PSD.
pub fn reconstruct_linear(e: &PauliExpectationSet) -> Result<ComplexMatrix> {
    let n = e.n_qubits;
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::TooManyQubits(n));
    }
    let d = 1usize << n;
    let mut acc = ComplexMatrix::zeros(d, d);
    for label in pauli_labels(n) {
        let v = e.get(&label).ok_or_else(|| Error::IncompleteSet(label.clone()))?;
        if v != 0.0 {
            acc = &acc + &pauli_operator(&label)?.scale_real(v);
        }
    }
    let mut out = acc.scale_real(1.0 / d as f64).hermitian_part();
    // pin the trace: Paulis other than the identity are traceless
    let drift = out.trace().re - e.get(&identity_label(n)).unwrap_or(1.0);
    for i in 0..d {
        out[(i, i)] -= Complex64::new(drift / d as f64, 0.0);
    }
    Ok(out)
}

/// Euclidean projection of `values` onto the probability simplex.
pub fn project_simplex(values: &[f64]) -> Vec<f64> {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (k, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let t = (cumulative - 1.0) / (k + 1) as f64;
        if u - t > 0.0 {
            theta = t;
        }
    }
    values.iter().map(|&v| (v - theta).max(0.0)).collect()
}

/// Frobenius-nearest unit-trace PSD matrix to a Hermitian matrix of any
/// trace.
pub fn nearest_density(h: &ComplexMatrix) -> Result<DensityMatrix> {
    let eig = eigh(h)?;
    let projected = project_simplex(&eig.values);
    let eig = crate::linalg::HermitianEigen {
        values: projected,
        vectors: eig.vectors,
    };
    Ok(DensityMatrix::from_trusted(eig.reassemble_with(|x| x)))
}

/// Closest (Frobenius) density matrix to a Hermitian unit-trace matrix.
pub fn project_psd(h: &ComplexMatrix) -> Result<DensityMatrix> {
    if !h.is_square() {
        return Err(Error::NotSquare {
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    crate::state::qubits_for_dim(h.rows())?;
    let herm = h.hermiticity_defect();
    if herm > PROJECTION_INPUT_TOL {
        return Err(Error::NotHermitian(herm));
    }
    let trace_dev = (h.trace() - Complex64::new(1.0, 0.0)).norm();
    if trace_dev > PROJECTION_INPUT_TOL {
        return Err(Error::BadTrace(trace_dev));
    }
    nearest_density(h)
}
