use nmrsim_core::separability::PptVerdict;
use nmrsim_core::{compose_pseudopure, critical_epsilon, ppt_cuts};
use serde::Serialize;

use super::{read_density, Ctx, InFile, Outcome};
use crate::args::{Format, SeparabilityArgs};
use crate::exit::CliError;
use crate::render;

pub const NECESSARY_ONLY: &str =
    "PPT is a necessary condition only for more than two qubits: a PPT result does not certify separability";

#[derive(Serialize)]
struct Output {
    #[serde(skip_serializing_if = "Option::is_none")]
    epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    critical_epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<PptVerdict>,
    /// `null` when the test is inconclusive.
    #[serde(skip_serializing_if = "Option::is_none")]
    separable: Option<Option<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

fn text(ctx: &Ctx, out: &Output) -> String {
    let s = &ctx.style;
    let mut t = String::new();
    if let Some(v) = &out.verdict {
        if !v.ppt_is_sufficient {
            t += &s.heading(&format!("note: {NECESSARY_ONLY}\n"));
        }
        let mut rows: Vec<(String, String)> = Vec::new();
        if let Some(eps) = out.epsilon {
            rows.push(("epsilon".into(), render::num(eps)));
        }
        for c in &v.cuts {
            rows.push((
                format!("cut {}", c.cut),
                format!(
                    "min eigenvalue of partial transpose {:+.12}  PPT {}",
                    c.report.min_eigenvalue_of_partial_transpose,
                    s.yes_no(c.report.is_ppt)
                ),
            ));
        }
        let verdict = match v.separable() {
            Some(true) => "separable",
            Some(false) => "entangled",
            None => "inconclusive (PPT across every cut)",
        };
        rows.push(("verdict".into(), verdict.into()));
        let borrowed: Vec<(&str, String)> = rows.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
        t += &render::fields(&borrowed);
    }
    if let Some(star) = out.critical_epsilon {
        t += &render::fields(&[("critical epsilon", render::num(star))]);
    }
    t
}

pub fn run(ctx: &Ctx, args: SeparabilityArgs) -> Result<Outcome, CliError> {
    let mut out = Output {
        epsilon: args.epsilon,
        critical_epsilon: None,
        verdict: None,
        separable: None,
        note: None,
    };
    if let Some(path) = &args.state {
        let rho = read_density(path, &ctx.profile)?;
        out.verdict = Some(ppt_cuts(&rho, args.tol)?);
    } else if let Some(path) = &args.rho1 {
        if args.epsilon.is_none() && !args.critical {
            return Err(CliError::Usage("--rho1 needs --epsilon E, --critical, or both".into()));
        }
        let rho1 = read_density(path, &ctx.profile)?;
        let label = path.display().to_string();
        if rho1.dim() != 4 {
            return Err(nmrsim_core::Error::WrongDim {
                expected: 4,
                found: rho1.dim(),
            }
            .in_file(&label)
            .into());
        }
        if args.critical {
            out.critical_epsilon = Some(critical_epsilon(&rho1).map_err(|e| e.in_file(&label))?);
        }
        if let Some(eps) = args.epsilon {
            let mixed = compose_pseudopure(eps, &rho1).map_err(|e| e.in_file(&label))?;
            out.verdict = Some(ppt_cuts(&mixed, args.tol)?);
        }
    }
    if let Some(v) = &out.verdict {
        out.separable = Some(v.separable());
        out.note = (!v.ppt_is_sufficient).then_some(NECESSARY_ONLY);
    }
    Ok(match ctx.format {
        Format::Json => render::json(&out),
        Format::Text => text(ctx, &out),
    }
    .into())
}
