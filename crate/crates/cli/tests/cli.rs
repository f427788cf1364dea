mod support;

use nmrsim_core::io::matrix_from_json;
use nmrsim_core::repro::RegressionBaseline;
use nmrsim_core::{load_dataset, reproduce_theory};
use support::{check_exit, check_golden, nmrsim, GOLDEN, NEGATIVE};

#[test]
fn golden_files() {
    let failures: Vec<String> = GOLDEN
        .iter()
        .filter_map(|(name, args)| check_golden(name, args).err())
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn negative_paths_use_documented_exit_codes() {
    let failures: Vec<String> = NEGATIVE
        .iter()
        .filter_map(|(args, code)| check_exit(args, *code).err())
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn help_lists_exit_codes() {
    for args in [&["--help"][..], &["evolve", "--help"]] {
        let run = nmrsim(args);
        assert_eq!(run.code, 0);
        assert!(run.stdout.contains("Exit codes:"));
        assert!(run.stdout.contains("4  dimension error"));
    }
    assert_eq!(nmrsim(&["--version"]).code, 0);
}

#[test]
fn evolve_matches_repro_bit_for_bit() {
    let run = nmrsim(&[
        "--profile",
        "experimental",
        "evolve",
        "examples/step/rho_initial.json",
        "examples/step/c_corrected.json",
        "--format",
        "json",
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let evolved = matrix_from_json(&run.stdout).unwrap();
    let report = reproduce_theory(&load_dataset()).unwrap();
    assert_eq!(evolved, report.computed_rho_th);
}

#[test]
fn bundled_baseline_equals_frozen_constants() {
    let text = std::fs::read_to_string(support::crate_dir().join("examples/baseline.json")).unwrap();
    let b: RegressionBaseline = serde_json::from_str(&text).unwrap();
    assert_eq!(b, RegressionBaseline::FROZEN);
}

#[test]
fn bundled_step_files_match_embedded_data() {
    let ds = load_dataset();
    let dir = support::crate_dir().join("examples/step");
    let load = |name: &str| matrix_from_json(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap();
    assert_eq!(load("c_raw.json"), ds.c_raw);
    assert_eq!(&load("c_corrected.json"), ds.c_corrected.matrix());
    assert_eq!(load("rho_initial.json"), ds.rho_initial);
    assert_eq!(load("rho_exp_after.json"), ds.rho_exp_after);
    assert_eq!(load("rho_th_printed.json"), ds.rho_th_printed);
}

#[test]
fn export_writes_only_into_the_given_directory() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("out");
    let run = nmrsim(&["repro", "--export", dir.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let mut names: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(
        names,
        [
            "c_corrected.json",
            "c_raw.json",
            "computed_rho_th.json",
            "rho_exp_after.json",
            "rho_initial.json",
            "rho_th_printed.json"
        ]
    );
    assert_eq!(std::fs::read_dir(tmp.path()).unwrap().count(), 1);
    let text = std::fs::read_to_string(dir.join("c_raw.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v["meta"]["provenance"].as_str().unwrap().contains("3I"));
}

#[test]
fn evolve_output_file() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("evolved.json");
    let run = nmrsim(&[
        "evolve",
        "examples/maximally_mixed_2q.json",
        "examples/step/c_corrected.json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let m = matrix_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(m.max_abs_diff(&nmrsim_core::ComplexMatrix::identity(4).scale_real(0.25)) <= 1e-15);
}

#[test]
fn tomography_is_deterministic_and_echoes_shots() {
    let args = [
        "tomography",
        "examples/bell_phi_plus.json",
        "--shots",
        "100000",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = nmrsim(&args);
    let b = nmrsim(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);

    let few = nmrsim(&[
        "tomography",
        "examples/bell_phi_plus.json",
        "--shots",
        "100",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&few.stdout).unwrap();
    assert_eq!(v["shots"], 100);
    assert!(v["fidelity_vs_input"].as_f64().unwrap() < 1.0);

    let exact = nmrsim(&[
        "tomography",
        "examples/bell_phi_plus.json",
        "--shots",
        "0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&exact.stdout).unwrap();
    assert!(v["shots"].is_null());
    assert!((v["fidelity_vs_input"].as_f64().unwrap() - 1.0).abs() <= 1e-10);
}

#[test]
fn three_qubit_separability_carries_banner() {
    let text = nmrsim(&["separability", "examples/ghz3.json"]);
    assert!(text.stdout.contains("necessary condition only"));
    let json = nmrsim(&["separability", "examples/ghz3.json", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert!(v["note"].as_str().unwrap().contains("necessary condition only"));
}

#[test]
fn critical_epsilon_of_bell_state() {
    let run = nmrsim(&[
        "separability",
        "--rho1",
        "examples/bell_phi_plus.json",
        "--critical",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert!((v["critical_epsilon"].as_f64().unwrap() - 1.0 / 3.0).abs() <= 1e-9);
}

#[test]
fn no_color_without_a_terminal() {
    let run = nmrsim(&["repro"]);
    assert!(!run.stdout.contains('\x1b'));
}
