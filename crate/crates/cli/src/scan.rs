use std::collections::BTreeMap;

use complex_dirac::morse::morse_energy;
use complex_dirac::numerics::{shoot_morse, ShootingOptions};
use complex_dirac::{Complex64, RadialGrid};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{LabelingArg, ModelKind};
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Rendered, Table, SCHEMA_VERSION};
use crate::settings::{parse_range, twice_j, Physics};
use crate::spectrum::coulomb_level;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxisName {
    Z,
    E,
    M,
    A,
    N,
    Eta,
}

impl AxisName {
    fn label(self) -> &'static str {
        match self {
            AxisName::Z => "Z",
            AxisName::E => "e",
            AxisName::M => "m",
            AxisName::A => "a",
            AxisName::N => "n",
            AxisName::Eta => "eta",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub name: AxisName,
    pub values: Vec<f64>,
}

/// `NAME=START..END:STEP`, END inclusive.
pub fn parse_axis(spec: &str) -> CliResult<Axis> {
    let bad = |why: &str| {
        CliError::Invalid(format!(
            "bad axis `{spec}`: {why} (expected NAME=START..END:STEP)"
        ))
    };
    let (name, rest) = spec.split_once('=').ok_or_else(|| bad("missing `=`"))?;
    let name = match name.trim() {
        "Z" | "z" => AxisName::Z,
        "e" => AxisName::E,
        "m" => AxisName::M,
        "a" => AxisName::A,
        "n" => AxisName::N,
        "eta" => AxisName::Eta,
        other => {
            return Err(bad(&format!(
                "unknown axis `{other}`, use Z, e, m, a, n or eta"
            )))
        }
    };
    let (range, step) = rest.split_once(':').ok_or_else(|| bad("missing `:STEP`"))?;
    let (start, end) = range.split_once("..").ok_or_else(|| bad("missing `..`"))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| bad(&format!("`{s}` is not a number")))
    };
    let (start, end, step) = (parse(start)?, parse(end)?, parse(step)?);
    if !(step > 0.0 && step.is_finite() && start.is_finite() && end.is_finite()) {
        return Err(bad("step must be positive and bounds finite"));
    }
    if end < start {
        return Err(bad("empty axis, END is below START"));
    }
    let count = ((end - start) / step + 1e-9).floor() as usize + 1;
    let values: Vec<f64> = (0..count).map(|k| start + k as f64 * step).collect();
    if name == AxisName::N && values.iter().any(|v| v.fract() != 0.0 || *v < 0.0) {
        return Err(bad("n takes non-negative integers"));
    }
    Ok(Axis { name, values })
}

pub struct ScanRequest<'a> {
    pub axes: &'a [String],
    pub n: Option<&'a str>,
    pub j: Option<f64>,
    pub labeling: Option<LabelingArg>,
    pub shooting: bool,
}

#[derive(Serialize)]
struct Row {
    point: BTreeMap<&'static str, f64>,
    status: &'static str,
    #[serde(rename = "E_r")]
    energies: Vec<Option<f64>>,
}

#[derive(Serialize)]
struct ScanDoc<'a> {
    schema_version: u32,
    command: &'static str,
    model: &'static str,
    axes: Vec<&'static str>,
    levels: &'a [u32],
    rows: &'a [Row],
}

pub fn run(base: &Physics, req: &ScanRequest<'_>) -> CliResult<Rendered> {
    let axes: Vec<Axis> = req
        .axes
        .iter()
        .map(|s| parse_axis(s))
        .collect::<CliResult<_>>()?;
    if axes.is_empty() || axes.len() > 2 {
        return Err(CliError::Invalid(
            "give one or two --axis specifications".into(),
        ));
    }
    if axes.len() == 2 && axes[0].name == axes[1].name {
        return Err(CliError::Invalid("the two scan axes must differ".into()));
    }
    if req.shooting && base.model != ModelKind::Morse {
        return Err(CliError::Invalid(
            "--shooting applies to the Morse model only".into(),
        ));
    }
    let n_axis = axes.iter().any(|a| a.name == AxisName::N);
    let labeling = req.labeling.unwrap_or(LabelingArg::Principal);
    let tj = twice_j(req.j.unwrap_or(0.5))?;
    let levels: Vec<u32> = if n_axis {
        Vec::new()
    } else {
        let default = match (base.model, labeling) {
            (ModelKind::Morse, _) => "0..4".to_string(),
            (ModelKind::Coulomb, LabelingArg::Principal) => {
                format!("{}..{}", tj.div_ceil(2), tj.div_ceil(2) + 2)
            }
            (ModelKind::Coulomb, LabelingArg::Radial) => "0..2".to_string(),
        };
        parse_range(req.n.unwrap_or(&default))?
    };

    let points: Vec<Vec<(AxisName, f64)>> = match axes.as_slice() {
        [a] => a.values.iter().map(|&v| vec![(a.name, v)]).collect(),
        [a, b] => a
            .values
            .iter()
            .flat_map(|&va| {
                b.values
                    .iter()
                    .map(move |&vb| vec![(a.name, va), (b.name, vb)])
            })
            .collect(),
        _ => unreachable!(),
    };

    let shooting_grid = RadialGrid::real(-8.0, 12.0, 4001)?;
    let rows: Vec<Row> = points
        .par_iter()
        .map(|point| {
            let mut physics = *base;
            let mut ns = levels.clone();
            for &(name, v) in point {
                match name {
                    AxisName::Z => physics.z = v,
                    AxisName::E => physics.charge = v,
                    AxisName::M => physics.mass = v,
                    AxisName::A => {
                        physics.a = v;
                        physics.b = (1.0 - v * v).max(0.0).sqrt();
                    }
                    AxisName::N => ns = vec![v as u32],
                    AxisName::Eta => physics.eta = v,
                }
            }
            evaluate(
                &physics,
                &ns,
                labeling,
                tj,
                req.shooting.then_some(&shooting_grid),
                point,
            )
        })
        .collect();

    let axis_labels: Vec<&'static str> = axes.iter().map(|a| a.name.label()).collect();
    let mut header: Vec<String> = axis_labels.iter().map(|s| s.to_string()).collect();
    header.push("status".into());
    if n_axis {
        header.push("E_r".into());
    } else {
        header.extend(levels.iter().map(|n| format!("E_r_n{n}")));
    }
    let mut table = Table::new(header);
    for row in &rows {
        let mut cells: Vec<Cell> = axes
            .iter()
            .map(|a| {
                let v = row.point[a.name.label()];
                if a.name == AxisName::N {
                    Cell::Int(v as i64)
                } else {
                    Cell::Num(v)
                }
            })
            .collect();
        cells.push(Cell::Text(row.status.into()));
        cells.extend(row.energies.iter().map(|&e| Cell::from(e)));
        table.push(cells);
    }
    let doc = ScanDoc {
        schema_version: SCHEMA_VERSION,
        command: "scan",
        model: base.model.name(),
        axes: axis_labels,
        levels: &levels,
        rows: &rows,
    };
    Ok(Rendered::new(&doc, table))
}

fn evaluate(
    physics: &Physics,
    ns: &[u32],
    labeling: LabelingArg,
    tj: u32,
    shooting: Option<&RadialGrid>,
    point: &[(AxisName, f64)],
) -> Row {
    let point_map = point.iter().map(|&(n, v)| (n.label(), v)).collect();
    let mut status = "ok";
    let mut note = |s: &'static str| {
        if status == "ok" {
            status = s;
        }
    };
    let energies = match physics.model {
        ModelKind::Morse => match physics.morse() {
            Err(_) => {
                note("invalid");
                vec![None; ns.len()]
            }
            Ok(model) => ns
                .iter()
                .map(|&n| match morse_energy(n, model.params()) {
                    Ok(level) if level.bound => match shooting {
                        None => Some(level.energy),
                        Some(grid) => {
                            let guess = Complex64::new(level.energy + 0.05, 0.0);
                            match shoot_morse(guess, &model, grid, &ShootingOptions::default()) {
                                Ok(res) => Some(res.energy.re),
                                Err(_) => {
                                    note("no_convergence");
                                    None
                                }
                            }
                        }
                    },
                    Ok(_) => {
                        note("unbound");
                        None
                    }
                    Err(_) => {
                        note("reality");
                        None
                    }
                })
                .collect(),
        },
        ModelKind::Coulomb => ns
            .iter()
            .map(|&n| match coulomb_level(physics, labeling, n, tj) {
                Ok((_, level)) => Some(level.energy),
                Err(CliError::Reality(_)) => {
                    note("reality");
                    None
                }
                Err(_) => {
                    note("invalid");
                    None
                }
            })
            .collect(),
    };
    Row {
        point: point_map,
        status,
        energies,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_grammar() {
        let a = parse_axis("Z=1..120:1").unwrap();
        assert_eq!(a.name, AxisName::Z);
        assert_eq!(a.values.len(), 120);
        let eta = parse_axis("eta=0..1:0.1").unwrap();
        assert_eq!(eta.values.len(), 11);
        assert!((eta.values[10] - 1.0).abs() < 1e-12);
        assert_eq!(
            parse_axis("e=-2..-1:0.5").unwrap().values,
            vec![-2.0, -1.5, -1.0]
        );
        for bad in [
            "Z=1..0:1",
            "Z=1..5:0",
            "q=1..2:1",
            "Z=1..2",
            "Z1..2:1",
            "n=0..1:0.5",
        ] {
            assert!(parse_axis(bad).is_err(), "{bad}");
        }
    }
}
