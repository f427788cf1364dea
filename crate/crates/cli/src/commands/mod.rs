mod ensemble;
mod evolve;
mod repro;
mod separability;
mod tomography;

use std::path::Path;

use nmrsim_core::io::matrix_from_json;
use nmrsim_core::{validate_density, ComplexMatrix, DensityMatrix, ValidationProfile};

use crate::args::{Cli, Command, Format};
use crate::exit::CliError;
use crate::render::Style;

pub struct Ctx {
    pub format: Format,
    pub profile: ValidationProfile,
    pub style: Style,
}

/// What a command prints, plus a failure that still produced a report.
pub struct Outcome {
    pub stdout: String,
    pub failure: Option<CliError>,
}

impl From<String> for Outcome {
    fn from(stdout: String) -> Self {
        Self { stdout, failure: None }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let ctx = Ctx {
        format: cli.format,
        profile: cli.profile.tolerances(),
        style: Style::detect(),
    };
    match cli.command {
        Command::Repro(a) => repro::run(&ctx, a),
        Command::Evolve(a) => evolve::run(&ctx, a),
        Command::Separability(a) => separability::run(&ctx, a),
        Command::Tomography(a) => tomography::run(&ctx, a),
        Command::Ensemble(a) => ensemble::run(&ctx, a),
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn file_label(path: &Path) -> String {
    path.display().to_string()
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix, CliError> {
    matrix_from_json(&read(path)?).map_err(|e| CliError::Core(e.in_file(&file_label(path))))
}

pub fn read_density(path: &Path, profile: &ValidationProfile) -> Result<DensityMatrix, CliError> {
    let m = read_matrix(path)?;
    validate_density(&m, profile).map_err(|e| CliError::Core(e.in_file(&file_label(path))))
}

trait InFile {
    fn in_file(self, name: &str) -> nmrsim_core::Error;
}

impl InFile for nmrsim_core::Error {
    fn in_file(self, name: &str) -> nmrsim_core::Error {
        nmrsim_core::Error::Validation {
            name: name.to_string(),
            source: Box::new(self),
        }
    }
}
