use complex_dirac::coulomb::{CoulombLevel, CoulombModel, Labeling};
use complex_dirac::morse::morse_energy;
use complex_dirac::Error as CoreError;
use serde::Serialize;

use crate::args::{LabelingArg, ModelKind};
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Rendered, Table, SCHEMA_VERSION};
use crate::settings::{parse_range, twice_j, Physics};

#[derive(Debug, Clone, Serialize)]
pub struct LevelRecord {
    pub model: &'static str,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<f64>,
    #[serde(rename = "E_r")]
    pub energy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<f64>,
    #[serde(rename = "N_eff", skip_serializing_if = "Option::is_none")]
    pub n_eff: Option<f64>,
    pub bound: bool,
    pub reality_ok: bool,
}

#[derive(Serialize)]
struct SpectrumDoc<'a> {
    schema_version: u32,
    command: &'static str,
    model: &'static str,
    levels: &'a [LevelRecord],
}

pub struct SpectrumRequest<'a> {
    pub n: Option<&'a str>,
    pub j: Option<f64>,
    pub labeling: Option<LabelingArg>,
}

pub fn run(physics: &Physics, req: &SpectrumRequest<'_>) -> CliResult<Rendered> {
    let levels = match physics.model {
        ModelKind::Morse => morse_levels(physics, req.n)?,
        ModelKind::Coulomb => coulomb_levels(physics, req)?,
    };
    let doc = SpectrumDoc {
        schema_version: SCHEMA_VERSION,
        command: "spectrum",
        model: physics.model.name(),
        levels: &levels,
    };
    let mut table = Table::new([
        "model",
        "n",
        "j",
        "E_r",
        "nu",
        "N_eff",
        "bound",
        "reality_ok",
    ]);
    for l in &levels {
        table.push(vec![
            Cell::Text(l.model.into()),
            Cell::Int(l.n.into()),
            l.j.into(),
            Cell::Num(l.energy),
            l.nu.into(),
            l.n_eff.into(),
            Cell::Bool(l.bound),
            Cell::Bool(l.reality_ok),
        ]);
    }
    Ok(Rendered::new(&doc, table))
}

fn morse_levels(physics: &Physics, n: Option<&str>) -> CliResult<Vec<LevelRecord>> {
    let model = physics.morse()?;
    let record = |level: complex_dirac::morse::MorseLevel| LevelRecord {
        model: "morse",
        n: level.n,
        j: None,
        energy: level.energy,
        nu: Some(level.nu),
        n_eff: None,
        bound: level.bound,
        reality_ok: true,
    };
    match n {
        None => Ok(model.spectrum().levels.into_iter().map(record).collect()),
        Some(text) => parse_range(text)?
            .into_iter()
            .map(|n| match morse_energy(n, model.params()) {
                Ok(level) => Ok(record(level)),
                Err(e @ CoreError::LevelOutOfRange { .. }) => Err(CliError::Reality(e.to_string())),
                Err(e) => Err(e.into()),
            })
            .collect(),
    }
}

pub fn coulomb_level(
    physics: &Physics,
    labeling: LabelingArg,
    n: u32,
    twice_j: u32,
) -> CliResult<(CoulombModel, CoulombLevel)> {
    let default_kappa = -((twice_j as i32 + 1) / 2);
    let model = physics.coulomb(physics.kappa_or(default_kappa))?;
    let level = match labeling {
        LabelingArg::Principal => model.energy_labeled(n, twice_j)?,
        LabelingArg::Radial => model.energy_radial(n)?,
    };
    Ok((model, level))
}

fn coulomb_levels(physics: &Physics, req: &SpectrumRequest<'_>) -> CliResult<Vec<LevelRecord>> {
    let labeling = req.labeling.unwrap_or(LabelingArg::Principal);
    let tj = twice_j(req.j.unwrap_or(0.5))?;
    let default_range = match labeling {
        LabelingArg::Principal => format!("{}..{}", tj.div_ceil(2), tj.div_ceil(2) + 2),
        LabelingArg::Radial => "0..2".to_string(),
    };
    parse_range(req.n.unwrap_or(&default_range))?
        .into_iter()
        .map(|n| {
            let (_, level) = coulomb_level(physics, labeling, n, tj)?;
            let j = match level.label {
                Labeling::Principal { twice_j, .. } => Some(f64::from(twice_j) / 2.0),
                Labeling::Radial { .. } => None,
            };
            Ok(LevelRecord {
                model: "coulomb",
                n,
                j,
                energy: level.energy,
                nu: None,
                n_eff: Some(level.n_eff),
                bound: true,
                reality_ok: true,
            })
        })
        .collect()
}
