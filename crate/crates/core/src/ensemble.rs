//! Ensembles recorded by how they were prepared.
//!
//! An [`EnsembleHistory`] keeps the weighted pure states an ensemble was
//! actually built from. Two histories can produce the same density matrix
//! while their members carry completely different entanglement; the
//! density matrix only sees the average.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::state::{bell_states, DensityMatrix, PureState};

const WEIGHT_SUM_TOL: f64 = 1e-12;
/// Concurrence at or below which a 2-qubit member counts as a product state.
pub const PRODUCT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleMember {
    pub weight: f64,
    pub state: PureState,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleHistory {
    label: String,
    members: Vec<EnsembleMember>,
}

impl EnsembleHistory {
    pub fn new(label: impl Into<String>, members: Vec<(f64, PureState)>) -> Result<Self> {
        let Some((_, first)) = members.first() else {
            return Err(Error::EmptyHistory);
        };
        let dim = first.dim();
        let mut total = 0.0;
        for (w, psi) in &members {
            if !w.is_finite() || *w <= 0.0 {
                return Err(Error::InvalidWeight(*w));
            }
            if psi.dim() != dim {
                return Err(Error::DimMismatch {
                    left: dim,
                    right: psi.dim(),
                });
            }
            total += w;
        }
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidWeight(total));
        }
        Ok(Self {
            label: label.into(),
            members: members
                .into_iter()
                .map(|(weight, state)| EnsembleMember { weight, state })
                .collect(),
        })
    }

    /// A quarter of the ensemble in each of |00⟩, |01⟩, |10⟩, |11⟩.
    pub fn computational_basis_quarters() -> Self {
        let members = (0..4).map(|i| (0.25, PureState::basis(2, i))).collect();
        Self::new("computational-basis quarters", members).unwrap()
    }

    /// A quarter of the ensemble in each of the four normalized Bell states.
    pub fn bell_basis_quarters() -> Self {
        let members = bell_states().into_iter().map(|b| (0.25, b)).collect();
        Self::new("Bell-basis quarters", members).unwrap()
    }

    /// `λ·h1 + (1 − λ)·h2` as a single history (members concatenated).
    pub fn merge(h1: &Self, h2: &Self, lambda: f64) -> Result<Self> {
        if !(0.0 < lambda && lambda < 1.0) {
            return Err(Error::InvalidWeight(lambda));
        }
        let members = h1
            .members
            .iter()
            .map(|m| (lambda * m.weight, m.state.clone()))
            .chain(h2.members.iter().map(|m| ((1.0 - lambda) * m.weight, m.state.clone())))
            .collect();
        Self::new(format!("{} + {}", h1.label, h2.label), members)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn members(&self) -> &[EnsembleMember] {
        &self.members
    }

    pub fn dim(&self) -> usize {
        self.members[0].state.dim()
    }
}

/// `Σ w_i |ψ_i⟩⟨ψ_i|`.
pub fn density_of(h: &EnsembleHistory) -> DensityMatrix {
    let d = h.dim();
    let mut acc = ComplexMatrix::zeros(d, d);
    for m in &h.members {
        let amps = m.state.amplitudes();
        acc = &acc + &ComplexMatrix::outer(amps, amps).scale_real(m.weight);
    }
    DensityMatrix::from_trusted(acc.hermitian_part())
}

/// Whether both histories yield density matrices within `tol` entrywise.
pub fn same_density(h1: &EnsembleHistory, h2: &EnsembleHistory, tol: f64) -> Result<bool> {
    if h1.dim() != h2.dim() {
        return Err(Error::DimMismatch {
            left: h1.dim(),
            right: h2.dim(),
        });
    }
    Ok(density_of(h1).matrix().max_abs_diff(density_of(h2).matrix()) <= tol)
}

/// Pure-state concurrence `2|ad − bc|` for amplitudes (a, b, c, d).
pub fn concurrence(psi: &PureState) -> Result<f64> {
    if psi.dim() != 4 {
        return Err(Error::WrongDim {
            expected: 4,
            found: psi.dim(),
        });
    }
    let [a, b, c, d] = [0, 1, 2, 3].map(|i| psi.amplitudes()[i]);
    Ok((2.0 * (a * d - b * c).norm()).min(1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MemberEntanglement {
    pub weight: f64,
    pub concurrence: f64,
    pub is_product: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MemberEntanglementReport {
    pub label: String,
    pub members: Vec<MemberEntanglement>,
}

impl MemberEntanglementReport {
    pub fn all_product(&self) -> bool {
        self.members.iter().all(|m| m.is_product)
    }
}

pub fn entanglement_report(h: &EnsembleHistory) -> Result<MemberEntanglementReport> {
    let members = h
        .members
        .iter()
        .map(|m| {
            let c = concurrence(&m.state)?;
            Ok(MemberEntanglement {
                weight: m.weight,
                concurrence: c,
                is_product: c <= PRODUCT_TOL,
            })
        })
        .collect::<Result<_>>()?;
    Ok(MemberEntanglementReport {
        label: h.label.clone(),
        members,
    })
}
