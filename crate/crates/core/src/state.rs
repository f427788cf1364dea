//! Validated quantum states and operators: density matrices, pure states,
//! unitaries, and the distance measures between states.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{eigh, eigvalsh, ComplexMatrix, ONE, ZERO};

/// Maximum `‖U†U − I‖_max` accepted by [`UnitaryOperator::new`].
pub const UNITARY_TOL: f64 = 1e-10;
/// Maximum `|‖ψ‖₂ − 1|` accepted by [`PureState::new`].
pub const NORM_TOL: f64 = 1e-12;

/// Tolerances applied when a matrix is accepted as a density matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValidationProfile {
    pub name: ProfileName,
    pub hermiticity_tol: f64,
    pub trace_tol: f64,
    pub psd_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileName {
    Strict,
    Experimental,
}

impl ValidationProfile {
    /// Default for synthetic data.
    pub const STRICT: Self = Self {
        name: ProfileName::Strict,
        hermiticity_tol: 1e-10,
        trace_tol: 1e-10,
        psd_tol: 1e-10,
    };

    /// For measured matrices printed to four decimals, which can carry a
    /// slightly off trace and small negative eigenvalues.
    pub const EXPERIMENTAL: Self = Self {
        name: ProfileName::Experimental,
        hermiticity_tol: 1e-3,
        trace_tol: 1e-3,
        psd_tol: 5e-2,
    };

    pub fn by_name(name: ProfileName) -> Self {
        match name {
            ProfileName::Strict => Self::STRICT,
            ProfileName::Experimental => Self::EXPERIMENTAL,
        }
    }
}

impl Default for ValidationProfile {
    fn default() -> Self {
        Self::STRICT
    }
}

impl fmt::Display for ProfileName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileName::Strict => "strict",
            ProfileName::Experimental => "experimental",
        })
    }
}

/// Number of qubits for a dimension that is a power of two.
pub fn qubits_for_dim(dim: usize) -> Result<usize> {
    if dim.is_power_of_two() {
        Ok(dim.trailing_zeros() as usize)
    } else {
        Err(Error::DimNotPowerOfTwo(dim))
    }
}

/// A Hermitian, unit-trace, positive semidefinite matrix on `n_qubits` qubits.
///
/// Instances come out of [`validate_density`] or out of operations that
/// preserve validity (evolution, mixing, projection).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    n_qubits: usize,
}

impl DensityMatrix {
    pub(crate) fn from_trusted(matrix: ComplexMatrix) -> Self {
        let n_qubits = qubits_for_dim(matrix.rows()).expect("trusted matrix has power-of-two dim");
        Self { matrix, n_qubits }
    }

    /// The maximally mixed state I/d.
    pub fn maximally_mixed(n_qubits: usize) -> Self {
        let d = 1usize << n_qubits;
        Self::from_trusted(ComplexMatrix::identity(d).scale_real(1.0 / d as f64))
    }

    /// The projector onto computational basis state `index`.
    pub fn basis(n_qubits: usize, index: usize) -> Self {
        PureState::basis(n_qubits, index).projector()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// tr(ρ²).
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        eigvalsh(&self.matrix)
    }
}

/// Checks `m` against the invariants of `profile`, reporting the first
/// violated one with its measured magnitude.
pub fn validate_density(m: &ComplexMatrix, profile: &ValidationProfile) -> Result<DensityMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n_qubits = qubits_for_dim(m.rows())?;
    let herm = m.hermiticity_defect();
    if herm > profile.hermiticity_tol {
        return Err(Error::NotHermitian(herm));
    }
    let trace = m.trace();
    let trace_dev = (trace - ONE).norm();
    if trace_dev > profile.trace_tol {
        return Err(Error::BadTrace(trace_dev));
    }
    let lambda_min = eigvalsh(m)?[0];
    if lambda_min < -profile.psd_tol {
        return Err(Error::NotPsd(lambda_min));
    }
    Ok(DensityMatrix {
        matrix: m.clone(),
        n_qubits,
    })
}

/// Normalized state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        qubits_for_dim(amplitudes.len())?;
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { amplitudes })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized(norm));
        }
        Self::new(amplitudes.into_iter().map(|z| z / norm).collect())
    }

    pub fn basis(n_qubits: usize, index: usize) -> Self {
        let d = 1usize << n_qubits;
        assert!(index < d, "basis index out of range");
        let mut amplitudes = vec![ZERO; d];
        amplitudes[index] = ONE;
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn n_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// |ψ⟩ ⊗ |φ⟩.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        PureState { amplitudes }
    }

    /// |ψ⟩⟨ψ|.
    pub fn projector(&self) -> DensityMatrix {
        DensityMatrix::from_trusted(ComplexMatrix::outer(&self.amplitudes, &self.amplitudes))
    }
}

/// The four Bell states, in the order Φ+, Φ−, Ψ+, Ψ−.
pub fn bell_states() -> [PureState; 4] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mk = |v: [f64; 4]| PureState {
        amplitudes: v.iter().map(|&x| Complex64::new(x * h, 0.0)).collect(),
    };
    [
        mk([1.0, 0.0, 0.0, 1.0]),
        mk([1.0, 0.0, 0.0, -1.0]),
        mk([0.0, 1.0, 1.0, 0.0]),
        mk([0.0, 1.0, -1.0, 0.0]),
    ]
}

/// Result of [`check_unitary`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitarityCheck {
    pub is_unitary: bool,
    pub defect: f64,
}

/// Measures `‖m†m − I‖_max` and compares it with `tol`.
pub fn check_unitary(m: &ComplexMatrix, tol: f64) -> Result<UnitarityCheck> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let defect = (&m.adjoint() * m).max_abs_diff(&ComplexMatrix::identity(m.rows()));
    Ok(UnitarityCheck {
        is_unitary: defect <= tol,
        defect,
    })
}

/// A square matrix with `‖U†U − I‖_max ≤ 1e−10`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryOperator {
    matrix: ComplexMatrix,
}

impl UnitaryOperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let check = check_unitary(&matrix, UNITARY_TOL)?;
        if !check.is_unitary {
            return Err(Error::NotUnitary(check.defect));
        }
        Ok(Self { matrix })
    }

    pub(crate) fn from_trusted(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.kron(&other.matrix),
        }
    }

    pub fn apply(&self, psi: &PureState) -> Result<PureState> {
        if psi.dim() != self.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: psi.dim(),
            });
        }
        Ok(PureState {
            amplitudes: self.matrix.matvec(psi.amplitudes()),
        })
    }
}

/// Kronecker product `a ⊗ b`.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

/// `U ρ U†`.
///
/// Only the upper triangle is computed; the lower triangle is its conjugate
/// mirror, so the output is exactly Hermitian.
pub fn evolve(rho: &DensityMatrix, u: &UnitaryOperator) -> Result<DensityMatrix> {
    if rho.dim() != u.dim() {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: u.dim(),
        });
    }
    let d = rho.dim();
    let um = u.matrix();
    let u_rho = um * rho.matrix();
    let mut out = ComplexMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let z: Complex64 = (0..d).map(|k| u_rho[(i, k)] * um[(j, k)].conj()).sum();
            if i == j {
                out[(i, i)] = Complex64::new(z.re, 0.0);
            } else {
                out[(i, j)] = z;
                out[(j, i)] = z.conj();
            }
        }
    }
    Ok(DensityMatrix {
        matrix: out,
        n_qubits: rho.n_qubits,
    })
}

fn check_dims(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<()> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    Ok(())
}

// Eigenvalues below d·ε·λ_max are rounding noise around zero; taking their
// square root would add O(1e-8) garbage to a fidelity.
fn noise_floor(values: &[f64]) -> f64 {
    let scale = values.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    values.len() as f64 * f64::EPSILON * scale
}

/// Principal square root of a Hermitian matrix. Negative eigenvalues and
/// those within rounding noise of zero are clipped to zero first.
pub fn sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = eigh(m)?;
    let floor = noise_floor(&eig.values);
    Ok(eig.reassemble_with(|x| if x > floor { x.sqrt() } else { 0.0 }))
}

/// Uhlmann fidelity `(tr √(√ρ σ √ρ))²`, clamped to [0, 1].
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    check_dims(rho, sigma)?;
    let root = sqrt_psd(rho.matrix())?;
    let inner = &(&root * sigma.matrix()) * &root;
    let values = eigvalsh(&inner)?;
    let floor = noise_floor(&values);
    let f: f64 = values.iter().filter(|&&x| x > floor).map(|x| x.sqrt()).sum();
    Ok((f * f).clamp(0.0, 1.0))
}

/// `½ Σ |λ_i(ρ − σ)|`.
pub fn trace_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    check_dims(rho, sigma)?;
    let diff = rho.matrix() - sigma.matrix();
    Ok(0.5 * eigvalsh(&diff)?.into_iter().map(f64::abs).sum::<f64>())
}

/// Single-qubit Pauli matrices and common gates.
pub mod gates {
    use super::*;

    fn m2(a: [[Complex64; 2]; 2]) -> ComplexMatrix {
        ComplexMatrix::from_vec(2, 2, a.concat()).unwrap()
    }

    pub fn pauli_i() -> ComplexMatrix {
        ComplexMatrix::identity(2)
    }

    pub fn pauli_x() -> ComplexMatrix {
        m2([[ZERO, ONE], [ONE, ZERO]])
    }

    pub fn pauli_y() -> ComplexMatrix {
        let i = Complex64::new(0.0, 1.0);
        m2([[ZERO, -i], [i, ZERO]])
    }

    pub fn pauli_z() -> ComplexMatrix {
        m2([[ONE, ZERO], [ZERO, -ONE]])
    }

    pub fn hadamard() -> ComplexMatrix {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        m2([[h, h], [h, -h]])
    }

    pub fn x() -> UnitaryOperator {
        UnitaryOperator::from_trusted(pauli_x())
    }

    pub fn identity(n_qubits: usize) -> UnitaryOperator {
        UnitaryOperator::from_trusted(ComplexMatrix::identity(1 << n_qubits))
    }
}
