//! Density-matrix toolkit for bulk-ensemble NMR quantum computing.
//!
//! Modules, bottom up:
//!
//! - [`linalg`]: dense complex matrices and a Hermitian eigensolver.
//! - [`state`]: validated density matrices, pure states, unitaries,
//!   fidelity and trace distance.
//! - [`ensemble`]: ensembles as preparation records; per-member
//!   concurrence.
//! - [`pseudopure`]: pseudo-pure states, exhaustive averaging, readout
//!   signal and repetition SNR.
//! - [`separability`]: partial transpose, PPT, critical ε.
//! - [`tomography`]: Pauli expectations, shot noise, linear inversion,
//!   PSD projection.
//! - [`repro`]: the embedded two-qubit step dataset and its reproduction.
//! - [`io`]: JSON schemas.

pub mod ensemble;
pub mod error;
pub mod io;
pub mod linalg;
pub mod pseudopure;
pub mod random;
pub mod repro;
pub mod separability;
pub mod state;
pub mod tomography;

pub use num_complex::Complex64;

pub use ensemble::{
    concurrence, density_of, entanglement_report, same_density, EnsembleHistory, MemberEntanglementReport,
};
pub use error::{Error, Result};
pub use linalg::{eigh, eigvalsh, ComplexMatrix, HermitianEigen};
pub use pseudopure::{
    compose_pseudopure, exhaustive_average, extract_epsilon, net_signal, snr_with_repetitions, PopulationVector,
    PseudoPureState,
};
pub use repro::{full_pipeline_demo, load_dataset, reproduce_theory, PaperDataset, ReproReport};
pub use separability::{critical_epsilon, is_separable_2q, partial_transpose, ppt_cuts, PptReport, Subsystem};
pub use state::{
    check_unitary, evolve, fidelity, tensor, trace_distance, validate_density, DensityMatrix, PureState,
    UnitaryOperator, ValidationProfile,
};
pub use tomography::{
    pauli_expectations, project_psd, reconstruct_linear, simulate_shot_noise, PauliExpectationSet, ShotNoiseConfig,
};
