//! Partial transpose, the PPT test, and the critical ε below which a
//! pseudo-pure state is separable.
//!
//! For two qubits PPT is equivalent to separability, so [`is_separable_2q`]
//! gives a verdict. For three qubits PPT across every cut is only a
//! necessary condition and [`ppt_cuts`] reports it as such.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{eigvalsh, ComplexMatrix};
use crate::pseudopure::ensure_pure;
use crate::state::DensityMatrix;

/// Default PPT tolerance, matching the strict validation profile.
pub const DEFAULT_PPT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Subsystem {
    A,
    B,
}

/// Transposes the tensor factors of the listed qubits (qubit 0 is the
/// leftmost factor).
pub fn partial_transpose_qubits(m: &ComplexMatrix, n_qubits: usize, qubits: &[usize]) -> ComplexMatrix {
    let d = 1usize << n_qubits;
    assert!(m.is_square() && m.rows() == d, "matrix is not {d}x{d}");
    let mask = qubits.iter().fold(0usize, |acc, &q| {
        assert!(q < n_qubits, "qubit {q} out of range");
        acc | (1 << (n_qubits - 1 - q))
    });
    let mut out = ComplexMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let ti = (i & !mask) | (j & mask);
            let tj = (j & !mask) | (i & mask);
            out[(ti, tj)] = m[(i, j)];
        }
    }
    out
}

/// Partial transpose of a 2-qubit state on subsystem A or B.
pub fn partial_transpose(rho: &DensityMatrix, subsystem: Subsystem) -> Result<ComplexMatrix> {
    if rho.dim() != 4 {
        return Err(Error::WrongDim {
            expected: 4,
            found: rho.dim(),
        });
    }
    let qubit = match subsystem {
        Subsystem::A => 0,
        Subsystem::B => 1,
    };
    Ok(partial_transpose_qubits(rho.matrix(), 2, &[qubit]))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PptReport {
    pub min_eigenvalue_of_partial_transpose: f64,
    pub is_ppt: bool,
    pub tolerance: f64,
}

impl PptReport {
    fn from_min(min: f64, tol: f64) -> Self {
        Self {
            min_eigenvalue_of_partial_transpose: min,
            is_ppt: min >= -tol,
            tolerance: tol,
        }
    }
}

/// PPT test for two qubits, which is a separability verdict.
pub fn is_separable_2q(rho: &DensityMatrix, tol: f64) -> Result<PptReport> {
    let pt = partial_transpose(rho, Subsystem::B)?;
    Ok(PptReport::from_min(eigvalsh(&pt)?[0], tol))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutReport {
    /// e.g. "A|BC" for the cut separating qubit A from the rest.
    pub cut: String,
    pub report: PptReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PptVerdict {
    pub n_qubits: usize,
    pub cuts: Vec<CutReport>,
    pub all_ppt: bool,
    /// True when PPT implies separability (two qubits). For larger
    /// registers PPT is a necessary condition only.
    pub ppt_is_sufficient: bool,
}

impl PptVerdict {
    /// `Some(separable)` when the verdict is conclusive.
    pub fn separable(&self) -> Option<bool> {
        if self.ppt_is_sufficient || !self.all_ppt {
            Some(self.all_ppt)
        } else {
            None
        }
    }
}

fn cut_label(n_qubits: usize, qubit: usize) -> String {
    let names: Vec<char> = (0..n_qubits).map(|q| (b'A' + q as u8) as char).collect();
    let rest: String = names
        .iter()
        .enumerate()
        .filter(|&(q, _)| q != qubit)
        .map(|(_, c)| c)
        .collect();
    format!("{}|{}", names[qubit], rest)
}

/// PPT across every single-qubit cut of a 2- or 3-qubit state.
pub fn ppt_cuts(rho: &DensityMatrix, tol: f64) -> Result<PptVerdict> {
    let n = rho.n_qubits();
    if !(2..=3).contains(&n) {
        return Err(Error::WrongDim {
            expected: if n < 2 { 4 } else { 8 },
            found: rho.dim(),
        });
    }
    let qubits: Vec<usize> = if n == 2 { vec![0] } else { (0..n).collect() };
    let cuts = qubits
        .into_iter()
        .map(|q| {
            let pt = partial_transpose_qubits(rho.matrix(), n, &[q]);
            Ok(CutReport {
                cut: cut_label(n, q),
                report: PptReport::from_min(eigvalsh(&pt)?[0], tol),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_ppt = cuts.iter().all(|c| c.report.is_ppt);
    Ok(PptVerdict {
        n_qubits: n,
        cuts,
        all_ppt,
        ppt_is_sufficient: n == 2,
    })
}

/// Largest ε for which `(1 − ε)·I/4 + ε·ρ₁` is PPT, for a pure 2-qubit ρ₁.
///
/// The partial transpose of the mixture has minimum eigenvalue
/// `(1 − ε)/d + ε·λ_min`, where λ_min belongs to the partial transpose of
/// ρ₁, so the threshold is `min(1, 1/(1 − d·λ_min))`.
pub fn critical_epsilon(rho1: &DensityMatrix) -> Result<f64> {
    if rho1.dim() != 4 {
        return Err(Error::WrongDim {
            expected: 4,
            found: rho1.dim(),
        });
    }
    ensure_pure(rho1)?;
    let lambda_min = eigvalsh(&partial_transpose(rho1, Subsystem::B)?)?[0];
    let d = rho1.dim() as f64;
    if lambda_min >= 0.0 {
        return Ok(1.0);
    }
    Ok((1.0 / (1.0 - d * lambda_min)).min(1.0))
}
