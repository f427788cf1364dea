use std::collections::BTreeMap;
use std::path::Path;

use nmrsim_core::io::{from_json, MatrixJson};
use nmrsim_core::repro::{printed_step_unitarity, BaselineCheck, RegressionBaseline};
use nmrsim_core::{load_dataset, reproduce_theory, ComplexMatrix, PaperDataset, ReproReport};
use serde::Serialize;

use super::{read, write, Ctx, Outcome};
use crate::args::{Format, ReproArgs};
use crate::exit::CliError;
use crate::render;

#[derive(Serialize)]
struct Output<'a> {
    report: &'a ReproReport,
    printed_step_unitarity_defect: f64,
    baseline: RegressionBaseline,
    baseline_checks: Vec<BaselineCheck>,
    max_dev_ceiling: f64,
    pass: bool,
    exported: Vec<String>,
}

fn export(dir: &Path, ds: &PaperDataset, report: &ReproReport) -> Result<Vec<String>, CliError> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Write {
        path: dir.to_path_buf(),
        source,
    })?;
    let notes = ds.notes.join(" | ");
    let files: [(&str, &ComplexMatrix, &str); 6] = [
        ("c_raw.json", &ds.c_raw, "step unitary as printed; not unitary"),
        (
            "c_corrected.json",
            ds.c_corrected.matrix(),
            "step unitary with (4,4) = 1/4 - 3i/4",
        ),
        ("rho_initial.json", &ds.rho_initial, "measured state before the step"),
        ("rho_exp_after.json", &ds.rho_exp_after, "measured state after the step"),
        (
            "rho_th_printed.json",
            &ds.rho_th_printed,
            "printed theoretical prediction",
        ),
        (
            "computed_rho_th.json",
            &report.computed_rho_th,
            "c_corrected * rho_initial * c_corrected^dagger",
        ),
    ];
    let mut written = Vec::new();
    for (name, m, description) in files {
        let meta = BTreeMap::from([
            ("description".to_string(), description.to_string()),
            ("provenance".to_string(), notes.clone()),
        ]);
        let path = dir.join(name);
        write(&path, &render::json(&MatrixJson::with_meta(m, meta)))?;
        written.push(name.to_string());
    }
    Ok(written)
}

fn text(ctx: &Ctx, ds: &PaperDataset, out: &Output) -> String {
    let s = &ctx.style;
    let r = out.report;
    let mut t = String::new();
    t += &s.heading("computed rho'_th = c rho(1) c^dagger\n");
    t += &render::matrix(&r.computed_rho_th, 4);
    t += &s.heading("printed rho'_th\n");
    t += &render::matrix(&ds.rho_th_printed, 4);
    t += &s.heading("summary\n");
    t += &render::fields(&[
        ("trace of computed rho'_th", render::num(r.computed_trace)),
        ("hermiticity defect", render::sci(r.computed_hermiticity_defect)),
        ("max |computed - printed|", render::sci(r.max_dev_vs_printed_th)),
        ("fidelity(exp, computed)", render::num(r.fidelity_exp_vs_computed_th)),
        (
            "trace distance(exp, computed)",
            render::num(r.trace_distance_exp_vs_computed_th),
        ),
        (
            "fidelity(printed, computed)",
            render::num(r.fidelity_printed_th_vs_computed_th),
        ),
        (
            "printed c unitarity defect",
            render::num(out.printed_step_unitarity_defect),
        ),
    ]);
    t += &s.heading("input diagnostics (experimental profile)\n");
    let diag: Vec<(&str, String)> = r
        .diagnostics
        .iter()
        .map(|d| {
            (
                d.name.as_str(),
                format!(
                    "trace {:.6}  min eigenvalue {:+.6}  projected {}",
                    d.trace,
                    d.min_eigenvalue,
                    s.yes_no(d.projected)
                ),
            )
        })
        .collect();
    t += &render::fields(&diag);
    t += &s.heading(&format!("baseline checks (tolerance {:e})\n", out.baseline.tolerance));
    let checks: Vec<(&str, String)> = out
        .baseline_checks
        .iter()
        .map(|c| {
            (
                c.name.as_str(),
                format!(
                    "{}  expected {:.15}  actual {:.15}  deviation {:.1e}",
                    s.verdict(c.pass),
                    c.expected,
                    c.actual,
                    c.deviation
                ),
            )
        })
        .collect();
    t += &render::fields(&checks);
    for name in &out.exported {
        t += &format!("wrote {name}\n");
    }
    t
}

pub fn run(ctx: &Ctx, args: ReproArgs) -> Result<Outcome, CliError> {
    let baseline = match &args.baseline {
        Some(path) => from_json::<RegressionBaseline>(&read(path)?)?,
        None => RegressionBaseline::FROZEN,
    };
    let ds = load_dataset();
    let report = reproduce_theory(&ds)?;
    let checks = baseline.compare(&report);
    let pass = checks.iter().all(|c| c.pass) && report.max_dev_vs_printed_th <= RegressionBaseline::MAX_DEV_CEILING;
    let exported = match &args.export {
        Some(dir) => export(dir, &ds, &report)?,
        None => Vec::new(),
    };
    let out = Output {
        report: &report,
        printed_step_unitarity_defect: printed_step_unitarity(&ds, 1e-12)?.defect,
        baseline,
        baseline_checks: checks,
        max_dev_ceiling: RegressionBaseline::MAX_DEV_CEILING,
        pass,
        exported,
    };
    let rendered = match ctx.format {
        Format::Json => render::json(&out),
        Format::Text => text(ctx, &ds, &out),
    };
    let failure = (!pass).then(|| {
        let mut failed: Vec<&str> = out
            .baseline_checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        if report.max_dev_vs_printed_th > RegressionBaseline::MAX_DEV_CEILING {
            failed.push("max_dev_ceiling");
        }
        CliError::Regression(format!("regression baseline mismatch: {}", failed.join(", ")))
    });
    Ok(Outcome {
        stdout: rendered,
        failure,
    })
}
