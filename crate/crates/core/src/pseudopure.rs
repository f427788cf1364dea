//! Pseudo-pure states `(1 − ε)·I/d + ε·ρ₁`, their preparation by exhaustive
//! averaging, and the readout picture in which ε is a signal strength.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::state::{qubits_for_dim, DensityMatrix};

/// Maximum `|tr(ρ₁²) − 1|` for a reference state to count as pure.
pub const PURITY_TOL: f64 = 1e-9;
const NORMALIZATION_TOL: f64 = 1e-12;
const IN_MODEL_RESIDUAL_TOL: f64 = 1e-9;

/// Noise model behind [`snr_with_repetitions`].
pub const SNR_MODEL: &str = "relative SNR = eps * sqrt(R) (independent identically distributed shot noise per repetition; model declaration, not a measured law)";

/// A pseudo-pure state: the pair (ε, ρ₁).
#[derive(Debug, Clone, PartialEq)]
pub struct PseudoPureState {
    epsilon: f64,
    rho1: DensityMatrix,
}

impl PseudoPureState {
    pub fn new(epsilon: f64, rho1: DensityMatrix) -> Result<Self> {
        check_epsilon(epsilon)?;
        ensure_pure(&rho1)?;
        Ok(Self { epsilon, rho1 })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn rho1(&self) -> &DensityMatrix {
        &self.rho1
    }

    pub fn n_qubits(&self) -> usize {
        self.rho1.n_qubits()
    }

    pub fn density(&self) -> DensityMatrix {
        mix_with_identity(self.epsilon, &self.rho1)
    }
}

fn check_epsilon(eps: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::EpsOutOfRange(eps));
    }
    Ok(())
}

pub(crate) fn ensure_pure(rho1: &DensityMatrix) -> Result<()> {
    let purity = rho1.purity();
    if (purity - 1.0).abs() > PURITY_TOL {
        return Err(Error::Rho1NotPure(purity));
    }
    Ok(())
}

pub(crate) fn mix_with_identity(eps: f64, rho1: &DensityMatrix) -> DensityMatrix {
    let d = rho1.dim();
    let background = (1.0 - eps) / d as f64;
    let mut m = rho1.matrix().scale_real(eps);
    for i in 0..d {
        m[(i, i)].re += background;
    }
    DensityMatrix::from_trusted(m)
}

/// `(1 − ε)·I/d + ε·ρ₁`.
pub fn compose_pseudopure(eps: f64, rho1: &DensityMatrix) -> Result<DensityMatrix> {
    PseudoPureState::new(eps, rho1.clone()).map(|p| p.density())
}

/// ε recovered from a state and its pure reference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EpsilonEstimate {
    pub epsilon: f64,
    /// `‖ρ − compose(ε, ρ₁)‖_max` at the recovered ε.
    pub residual: f64,
    /// ε lies in [0, 1] and the residual is negligible.
    pub in_model: bool,
}

/// `ε = (d·tr(ρ·ρ₁) − 1)/(d − 1)`, unclamped.
pub fn extract_epsilon(rho: &DensityMatrix, rho1: &DensityMatrix) -> Result<EpsilonEstimate> {
    ensure_pure(rho1)?;
    if rho.dim() != rho1.dim() {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: rho1.dim(),
        });
    }
    let d = rho.dim() as f64;
    let overlap = (rho.matrix() * rho1.matrix()).trace().re;
    let epsilon = (d * overlap - 1.0) / (d - 1.0);
    let residual = rho.matrix().max_abs_diff(mix_with_identity(epsilon, rho1).matrix());
    Ok(EpsilonEstimate {
        epsilon,
        residual,
        in_model: (-IN_MODEL_RESIDUAL_TOL..=1.0 + IN_MODEL_RESIDUAL_TOL).contains(&epsilon)
            && residual <= IN_MODEL_RESIDUAL_TOL,
    })
}

/// Populations (or raw counts) over computational basis states.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PopulationVector {
    pub counts: Vec<f64>,
    pub normalized: bool,
}

impl PopulationVector {
    pub fn probabilities(p: Vec<f64>) -> Result<Self> {
        let v = Self {
            counts: p,
            normalized: true,
        };
        v.check()?;
        Ok(v)
    }

    pub fn counts(c: Vec<f64>) -> Result<Self> {
        let v = Self {
            counts: c,
            normalized: false,
        };
        v.check()?;
        Ok(v)
    }

    /// Checks nonnegativity and, when flagged normalized, unit sum.
    pub fn check(&self) -> Result<()> {
        if let Some(&bad) = self.counts.iter().find(|&&c| !c.is_finite() || c < 0.0) {
            return Err(Error::NegativeCount(bad));
        }
        if self.normalized {
            let total: f64 = self.counts.iter().sum();
            if (total - 1.0).abs() > NORMALIZATION_TOL {
                return Err(Error::NotNormalized(total));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AveragedState {
    pub state: DensityMatrix,
    pub epsilon: f64,
    /// The target population was below 1/d, so ε < 0.
    pub negative_epsilon: bool,
}

/// Average of `diag(p)` over every permutation of the non-target basis
/// states. Each non-target population becomes the mean of the non-target
/// populations, which is the pseudo-pure state on `|target⟩` with
/// `ε = (d·p_target − 1)/(d − 1)`.
pub fn exhaustive_average(p: &PopulationVector, target_index: usize) -> Result<AveragedState> {
    if !p.normalized {
        return Err(Error::NotNormalized(p.counts.iter().sum()));
    }
    p.check()?;
    let d = p.len();
    qubits_for_dim(d)?;
    if target_index >= d {
        return Err(Error::IndexOutOfRange {
            index: target_index,
            len: d,
        });
    }
    let p_target = p.counts[target_index];
    let rest: f64 = p
        .counts
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != target_index)
        .map(|(_, &x)| x)
        .sum();
    let background = if d > 1 { rest / (d - 1) as f64 } else { 0.0 };
    let diag: Vec<f64> = (0..d)
        .map(|i| if i == target_index { p_target } else { background })
        .collect();
    let epsilon = if d > 1 {
        (d as f64 * p_target - 1.0) / (d as f64 - 1.0)
    } else {
        1.0
    };
    Ok(AveragedState {
        state: DensityMatrix::from_trusted(ComplexMatrix::from_real_diag(&diag)),
        epsilon,
        negative_epsilon: epsilon < 0.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NetSignal {
    /// `n₀ − n₁`; negative means net downward transitions.
    pub net_upward: f64,
    /// Size of the pure ensemble that gives the same coil signal.
    pub equivalent_pure_count: f64,
}

/// Net coil signal of a one-qubit ensemble given raw populations (n₀, n₁):
/// every upward transition from |0⟩ cancels against a downward one from |1⟩.
pub fn net_signal(p: &PopulationVector) -> Result<NetSignal> {
    if p.len() != 2 {
        return Err(Error::WrongLength {
            expected: 2,
            found: p.len(),
        });
    }
    p.check()?;
    let net = p.counts[0] - p.counts[1];
    Ok(NetSignal {
        net_upward: net,
        equivalent_pure_count: net.abs(),
    })
}

/// Relative signal-to-noise after `repetitions` runs; see [`SNR_MODEL`].
pub fn snr_with_repetitions(eps: f64, repetitions: u64) -> Result<f64> {
    if repetitions == 0 {
        return Err(Error::ZeroRepetitions);
    }
    if !eps.is_finite() || eps < 0.0 {
        return Err(Error::EpsOutOfRange(eps));
    }
    Ok(eps * (repetitions as f64).sqrt())
}
