use nmrsim_core::io::history_from_json;
use nmrsim_core::{density_of, entanglement_report, ComplexMatrix, MemberEntanglementReport};
use serde::Serialize;

use super::{read, Ctx, InFile, Outcome};
use crate::args::{EnsembleArgs, Format};
use crate::exit::CliError;
use crate::render;

#[derive(Serialize)]
struct Output {
    label: String,
    n_members: usize,
    density: ComplexMatrix,
    purity: f64,
    /// Concurrence is defined for two-qubit members only.
    entanglement: Option<MemberEntanglementReport>,
}

fn text(ctx: &Ctx, out: &Output) -> String {
    let s = &ctx.style;
    let mut t = s.heading(&format!("{}: density matrix\n", out.label));
    t += &render::matrix(&out.density, 4);
    t += &render::fields(&[
        ("members", out.n_members.to_string()),
        ("purity", render::num(out.purity)),
    ]);
    match &out.entanglement {
        Some(report) => {
            t += &s.heading("members\n");
            let rows: Vec<(String, String)> = report
                .members
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    (
                        format!("#{i}"),
                        format!(
                            "weight {:.6}  concurrence {:.6}  product {}",
                            m.weight,
                            m.concurrence,
                            s.yes_no(m.is_product)
                        ),
                    )
                })
                .collect();
            let borrowed: Vec<(&str, String)> = rows.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
            t += &render::fields(&borrowed);
            t += &render::fields(&[("all members product", s.yes_no(report.all_product()).to_string())]);
        }
        None => t += "  concurrence not reported: members are not two-qubit states\n",
    }
    t
}

pub fn run(ctx: &Ctx, args: EnsembleArgs) -> Result<Outcome, CliError> {
    let h = history_from_json(&read(&args.history)?).map_err(|e| e.in_file(&args.history.display().to_string()))?;
    let rho = density_of(&h);
    let out = Output {
        label: h.label().to_string(),
        n_members: h.members().len(),
        purity: rho.purity(),
        entanglement: if h.dim() == 4 {
            Some(entanglement_report(&h)?)
        } else {
            None
        },
        density: rho.into_matrix(),
    };
    Ok(match ctx.format {
        Format::Json => render::json(&out),
        Format::Text => text(ctx, &out),
    }
    .into())
}
