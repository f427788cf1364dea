use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nmrsim_core::ValidationProfile;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  usage error, unreadable file or malformed JSON
  2  regression baseline mismatch
  3  validation failure (not a density matrix, not unitary, not pure, ...)
  4  dimension error (mismatched or unsupported sizes)

Set NMRSIM_NO_COLOR to disable ANSI styling in text output.";

#[derive(Debug, Parser)]
#[command(
    name = "nmrsim",
    version,
    about = "Density-matrix tools for bulk-ensemble NMR quantum computing"
)]
#[command(after_help = EXIT_CODES)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Tolerances used when validating input density matrices.
    #[arg(long, global = true, value_enum, default_value_t = Profile::Strict)]
    pub profile: Profile,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Profile {
    /// 1e-10 on Hermiticity, trace and eigenvalues.
    Strict,
    /// 1e-3 on Hermiticity and trace, 5e-2 on eigenvalues, for tomography data.
    Experimental,
}

impl Profile {
    pub fn tolerances(self) -> ValidationProfile {
        match self {
            Profile::Strict => ValidationProfile::STRICT,
            Profile::Experimental => ValidationProfile::EXPERIMENTAL,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute the printed two-qubit step and check it against the frozen baselines.
    #[command(after_help = EXIT_CODES)]
    Repro(ReproArgs),
    /// Apply a unitary to a density matrix: U rho U^dagger.
    #[command(after_help = EXIT_CODES)]
    Evolve(EvolveArgs),
    /// PPT test of a state, or of a pseudo-pure state built from --rho1.
    #[command(after_help = EXIT_CODES)]
    Separability(SeparabilityArgs),
    /// Simulate Pauli tomography of a state and report the reconstruction.
    #[command(after_help = EXIT_CODES)]
    Tomography(TomographyArgs),
    /// Density matrix and per-member entanglement of an ensemble history.
    #[command(after_help = EXIT_CODES)]
    Ensemble(EnsembleArgs),
}

#[derive(Debug, Args)]
pub struct ReproArgs {
    /// Baseline JSON to compare against instead of the built-in one.
    #[arg(long, value_name = "FILE")]
    pub baseline: Option<PathBuf>,

    /// Write the embedded matrices and the computed prediction as JSON files into DIR.
    #[arg(long, value_name = "DIR")]
    pub export: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    /// Density matrix JSON file.
    pub state: PathBuf,

    /// Unitary matrix JSON file.
    pub unitary: PathBuf,

    /// Also write the evolved matrix as JSON to FILE.
    #[arg(long, short, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SeparabilityArgs {
    /// Density matrix JSON file (2 or 3 qubits).
    #[arg(required_unless_present = "rho1", conflicts_with = "rho1")]
    pub state: Option<PathBuf>,

    /// Pure 2-qubit reference state for a pseudo-pure mixture.
    #[arg(long, value_name = "FILE")]
    pub rho1: Option<PathBuf>,

    /// Mixing parameter of the pseudo-pure state (1 - eps) I/4 + eps rho1.
    #[arg(long, requires = "rho1")]
    pub epsilon: Option<f64>,

    /// Report the largest epsilon at which the pseudo-pure state stays PPT.
    #[arg(long, requires = "rho1")]
    pub critical: bool,

    /// Eigenvalues of the partial transpose above -tol count as nonnegative.
    #[arg(long, default_value_t = nmrsim_core::separability::DEFAULT_PPT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct TomographyArgs {
    /// Density matrix JSON file (at most 3 qubits).
    pub state: PathBuf,

    /// Shots per Pauli observable; 0 uses exact expectation values.
    #[arg(long, default_value_t = 0)]
    pub shots: u64,

    /// Seed for the shot-noise generator.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct EnsembleArgs {
    /// Ensemble history JSON file.
    pub history: PathBuf,
}
