//! Runs the built `nmrsim` binary against bundled examples and golden files.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn nmrsim(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_nmrsim"))
        .args(args)
        .current_dir(crate_dir())
        .env("NMRSIM_NO_COLOR", "1")
        .output()
        .expect("spawn nmrsim");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// (golden file, arguments). Every subcommand appears in both formats.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("repro.txt", &["repro"]),
    (
        "repro.json",
        &["repro", "--format", "json", "--baseline", "examples/baseline.json"],
    ),
    (
        "evolve_step.txt",
        &[
            "--profile",
            "experimental",
            "evolve",
            "examples/step/rho_initial.json",
            "examples/step/c_corrected.json",
        ],
    ),
    (
        "evolve_mixed.json",
        &[
            "evolve",
            "examples/maximally_mixed_2q.json",
            "examples/step/c_corrected.json",
            "--format",
            "json",
        ],
    ),
    (
        "separability_mixed.txt",
        &["separability", "examples/maximally_mixed_2q.json"],
    ),
    ("separability_ghz3.txt", &["separability", "examples/ghz3.json"]),
    (
        "separability_bell.json",
        &[
            "separability",
            "--rho1",
            "examples/bell_phi_plus.json",
            "--critical",
            "--epsilon",
            "0.32",
            "--format",
            "json",
        ],
    ),
    ("tomography_bell.txt", &["tomography", "examples/bell_phi_plus.json"]),
    (
        "tomography_ket00.json",
        &["tomography", "examples/ket00.json", "--format", "json"],
    ),
    ("ensemble_basis.txt", &["ensemble", "examples/basis_quarters.json"]),
    (
        "ensemble_bell.json",
        &["ensemble", "examples/bell_quarters.json", "--format", "json"],
    ),
    (
        "ensemble_single.json",
        &["ensemble", "examples/single_ket00.json", "--format", "json"],
    ),
];

/// (arguments, expected exit code) for the error paths.
pub const NEGATIVE: &[(&[&str], i32)] = &[
    (&["frobnicate"], 1),
    (
        &["evolve", "tests/fixtures/ragged.json", "examples/step/c_corrected.json"],
        1,
    ),
    (
        &[
            "evolve",
            "tests/fixtures/not_json.json",
            "examples/step/c_corrected.json",
        ],
        1,
    ),
    (
        &[
            "evolve",
            "tests/fixtures/missing.json",
            "examples/step/c_corrected.json",
        ],
        1,
    ),
    (&["separability", "--rho1", "examples/bell_phi_plus.json"], 1),
    (&["repro", "--baseline", "tests/fixtures/tampered_baseline.json"], 2),
    (
        &[
            "repro",
            "--baseline",
            "tests/fixtures/tampered_baseline.json",
            "--format",
            "json",
        ],
        2,
    ),
    (
        &[
            "evolve",
            "tests/fixtures/not_psd.json",
            "examples/step/c_corrected.json",
        ],
        3,
    ),
    (
        &[
            "evolve",
            "examples/step/rho_initial.json",
            "examples/step/c_corrected.json",
        ],
        3,
    ),
    (
        &[
            "evolve",
            "tests/fixtures/qubit_mixed.json",
            "tests/fixtures/not_unitary.json",
        ],
        3,
    ),
    (
        &["separability", "--rho1", "tests/fixtures/mixed_rho1.json", "--critical"],
        3,
    ),
    (&["ensemble", "tests/fixtures/bad_weights.json"], 3),
    (
        &[
            "evolve",
            "tests/fixtures/qubit_mixed.json",
            "examples/step/c_corrected.json",
        ],
        4,
    ),
    (&["tomography", "tests/fixtures/four_qubit_mixed.json"], 4),
    (&["ensemble", "tests/fixtures/mixed_dims.json"], 4),
    (
        &[
            "separability",
            "--rho1",
            "tests/fixtures/qubit_mixed.json",
            "--critical",
        ],
        4,
    ),
];

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(name)
}

/// Compares a run with its golden file. With `UPDATE_GOLDEN` set, rewrites
/// the file instead.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let run = nmrsim(args);
    if run.code != 0 {
        return Err(format!("{name}: exit {} ({})", run.code, run.stderr.trim()));
    }
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &run.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{name}: {e}"))?;
    if want != run.stdout {
        let line = want
            .lines()
            .zip(run.stdout.lines())
            .position(|(a, b)| a != b)
            .map_or_else(
                || "length differs".to_string(),
                |i| format!("first difference at line {}", i + 1),
            );
        return Err(format!("{name}: output differs from golden file, {line}"));
    }
    if name.ends_with(".json") {
        serde_json::from_str::<serde_json::Value>(&run.stdout).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

pub fn check_exit(args: &[&str], expected: i32) -> Result<(), String> {
    let run = nmrsim(args);
    if run.code != expected {
        return Err(format!(
            "{args:?}: exit {} expected {expected} ({})",
            run.code,
            run.stderr.trim()
        ));
    }
    if expected != 0 && !run.stderr.starts_with("error") {
        return Err(format!("{args:?}: no error message on stderr"));
    }
    Ok(())
}
