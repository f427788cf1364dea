use nmrsim_core::io::MatrixJson;
use nmrsim_core::{evolve, UnitaryOperator};

use super::{read_density, read_matrix, write, Ctx, InFile, Outcome};
use crate::args::{EvolveArgs, Format};
use crate::exit::CliError;
use crate::render;

pub fn run(ctx: &Ctx, args: EvolveArgs) -> Result<Outcome, CliError> {
    let rho = read_density(&args.state, &ctx.profile)?;
    let u = UnitaryOperator::new(read_matrix(&args.unitary)?)
        .map_err(|e| e.in_file(&args.unitary.display().to_string()))?;
    let out = evolve(&rho, &u)?;
    let doc = render::json(&MatrixJson::from(out.matrix().clone()));
    if let Some(path) = &args.output {
        write(path, &doc)?;
    }
    Ok(match ctx.format {
        Format::Json => doc,
        Format::Text => {
            let mut t = ctx.style.heading("U rho U^dagger\n");
            t += &render::matrix(out.matrix(), 4);
            t += &render::fields(&[
                ("trace", render::num(out.matrix().trace().re)),
                ("purity", render::num(out.purity())),
                ("min eigenvalue", format!("{:+.12}", out.eigenvalues()?[0])),
            ]);
            t
        }
    }
    .into())
}
