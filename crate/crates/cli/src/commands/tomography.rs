use std::collections::BTreeMap;

use nmrsim_core::{
    eigvalsh, fidelity, pauli_expectations, project_psd, reconstruct_linear, simulate_shot_noise, trace_distance,
    ComplexMatrix, ShotNoiseConfig,
};
use serde::Serialize;

use super::{read_density, Ctx, Outcome};
use crate::args::{Format, TomographyArgs};
use crate::exit::CliError;
use crate::render;

#[derive(Serialize)]
struct Output {
    n_qubits: usize,
    /// `null` for exact expectation values.
    shots: Option<u64>,
    seed: u64,
    expectations: BTreeMap<String, f64>,
    linear_reconstruction: ComplexMatrix,
    linear_min_eigenvalue: f64,
    reconstructed: ComplexMatrix,
    max_dev_vs_input: f64,
    fidelity_vs_input: f64,
    trace_distance_vs_input: f64,
}

fn text(ctx: &Ctx, out: &Output) -> String {
    let s = &ctx.style;
    let mut t = String::new();
    t += &s.heading("Pauli expectations\n");
    let exp: Vec<(&str, String)> = out
        .expectations
        .iter()
        .map(|(k, v)| (k.as_str(), format!("{v:+.6}")))
        .collect();
    t += &render::fields(&exp);
    t += &s.heading("reconstructed state (after projection)\n");
    t += &render::matrix(&out.reconstructed, 4);
    let shots = match out.shots {
        Some(n) => n.to_string(),
        None => "exact".into(),
    };
    t += &render::fields(&[
        ("shots per observable", shots),
        ("seed", out.seed.to_string()),
        (
            "min eigenvalue before projection",
            format!("{:+.12}", out.linear_min_eigenvalue),
        ),
        ("max |reconstructed - input|", render::sci(out.max_dev_vs_input)),
        ("fidelity to input", render::num(out.fidelity_vs_input)),
        ("trace distance to input", render::num(out.trace_distance_vs_input)),
    ]);
    t
}

pub fn run(ctx: &Ctx, args: TomographyArgs) -> Result<Outcome, CliError> {
    let rho = read_density(&args.state, &ctx.profile)?;
    let set = if args.shots == 0 {
        pauli_expectations(&rho)?
    } else {
        simulate_shot_noise(
            &rho,
            &ShotNoiseConfig {
                shots_per_observable: args.shots,
                seed: args.seed,
            },
        )?
    };
    let linear = reconstruct_linear(&set)?;
    let projected = project_psd(&linear)?;
    let out = Output {
        n_qubits: rho.n_qubits(),
        shots: (args.shots > 0).then_some(args.shots),
        seed: args.seed,
        expectations: set.values.clone(),
        linear_min_eigenvalue: eigvalsh(&linear)?[0],
        max_dev_vs_input: projected.matrix().max_abs_diff(rho.matrix()),
        fidelity_vs_input: fidelity(&projected, &rho)?,
        trace_distance_vs_input: trace_distance(&projected, &rho)?,
        reconstructed: projected.into_matrix(),
        linear_reconstruction: linear,
    };
    Ok(match ctx.format {
        Format::Json => render::json(&out),
        Format::Text => text(ctx, &out),
    }
    .into())
}
