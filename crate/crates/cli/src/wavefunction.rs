use complex_dirac::diracver::{lower_from_upper, LowerContext};
use complex_dirac::numerics::{sample_profile, Stencil};
use complex_dirac::{Complex64, RadialGrid};
use serde::Serialize;

use crate::args::ModelKind;
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Rendered, Table, SCHEMA_VERSION};
use crate::settings::Physics;

#[derive(Serialize)]
struct Sample {
    x: f64,
    re_r: f64,
    im_r: f64,
    re_phi_u: f64,
    im_phi_u: f64,
    re_phi_l: Option<f64>,
    im_phi_l: Option<f64>,
}

#[derive(Serialize)]
struct WavefunctionDoc {
    schema_version: u32,
    command: &'static str,
    model: &'static str,
    n: u32,
    #[serde(rename = "E_r")]
    energy: f64,
    samples: Vec<Sample>,
}

pub fn run(
    physics: &Physics,
    grid: &RadialGrid,
    n: Option<u32>,
    lower: bool,
) -> CliResult<Rendered> {
    let n = n.ok_or_else(|| CliError::Invalid("missing required parameter --n".into()))?;
    let (energy, upper, lower) = match physics.model {
        ModelKind::Morse => {
            let model = physics.morse()?;
            let energy = model.energy(n)?.energy;
            let upper = sample_profile(grid, |r| model.upper(r.re, n))?;
            let lower = sample_profile(grid, |r| model.lower(r.re, n))?;
            (energy, upper, Some(lower))
        }
        ModelKind::Coulomb => {
            let model = physics.coulomb(physics.kappa_or(-1))?;
            let energy = model.energy_radial(n)?.energy;
            let upper = sample_profile(grid, |r| model.upper(r, n, energy))?;
            let lower = if lower {
                Some(lower_from_upper(
                    &upper,
                    LowerContext::Coulomb(&model),
                    energy,
                    Stencil::default(),
                )?)
            } else {
                None
            };
            (energy, upper, lower)
        }
    };

    let mut table = Table::new([
        "x", "re_r", "im_r", "re_phi_u", "im_phi_u", "re_phi_l", "im_phi_l",
    ]);
    let mut samples = Vec::with_capacity(grid.len());
    for (k, r) in grid.nodes().enumerate() {
        let u = upper.values()[k];
        let l: Option<Complex64> = lower.as_ref().map(|p| p.values()[k]);
        let s = Sample {
            x: grid.x(k),
            re_r: r.re,
            im_r: r.im,
            re_phi_u: u.re,
            im_phi_u: u.im,
            re_phi_l: l.map(|c| c.re),
            im_phi_l: l.map(|c| c.im),
        };
        table.push(vec![
            Cell::Num(s.x),
            Cell::Num(s.re_r),
            Cell::Num(s.im_r),
            Cell::Num(s.re_phi_u),
            Cell::Num(s.im_phi_u),
            s.re_phi_l.into(),
            s.im_phi_l.into(),
        ]);
        samples.push(s);
    }
    let doc = WavefunctionDoc {
        schema_version: SCHEMA_VERSION,
        command: "wavefunction",
        model: physics.model.name(),
        n,
        energy,
        samples,
    };
    Ok(Rendered::new(&doc, table))
}
