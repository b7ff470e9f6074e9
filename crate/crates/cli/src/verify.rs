use complex_dirac::coulomb::CoulombModel;
use complex_dirac::diracver::{
    lower_from_upper, reconstruct, verify_coulomb_mixed, verify_first_order, Flavor, LowerContext,
};
use complex_dirac::gauge::gauge_field_morse;
use complex_dirac::numerics::{residual, sample_profile, shoot_morse, ShootingOptions, Stencil};
use complex_dirac::{Complex64, Error as CoreError, RadialGrid};
use serde::Serialize;

use crate::args::ModelKind;
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Rendered, Table, SCHEMA_VERSION};
use crate::settings::Physics;

const RESIDUAL_TOL: f64 = 1e-8;
const SHOOTING_TOL: f64 = 1e-6;
const IMAG_TOL: f64 = 1e-8;
const CLOSURE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub pass: bool,
    /// Non-gating checks are diagnostics and never affect the exit code.
    pub gating: bool,
    pub converged: bool,
}

impl Check {
    fn new(name: impl Into<String>, value: f64, threshold: f64, gating: bool) -> Self {
        Self {
            name: name.into(),
            value,
            threshold,
            pass: value.abs() <= threshold,
            gating,
            converged: true,
        }
    }

    fn diverged(name: impl Into<String>, threshold: f64) -> Self {
        Self {
            name: name.into(),
            value: f64::INFINITY,
            threshold,
            pass: false,
            gating: true,
            converged: false,
        }
    }
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    schema_version: u32,
    command: &'static str,
    model: &'static str,
    all_pass: bool,
    checks: &'a [Check],
}

/// Report plus the outcome it implies for the exit code.
pub fn run(
    physics: &Physics,
    grid: &RadialGrid,
    kappa_override: Option<i32>,
) -> CliResult<(Rendered, CliResult<()>)> {
    let checks = match physics.model {
        ModelKind::Morse => morse_checks(physics, grid, kappa_override)?,
        ModelKind::Coulomb => coulomb_checks(physics, grid, kappa_override)?,
    };
    let verdict = if let Some(c) = checks.iter().find(|c| !c.converged) {
        Err(CliError::NoConvergence(format!(
            "check `{}` did not converge",
            c.name
        )))
    } else if let Some(c) = checks.iter().find(|c| c.gating && !c.pass) {
        Err(CliError::Tolerance(format!(
            "check `{}` failed: {:e} > {:e}",
            c.name, c.value, c.threshold
        )))
    } else {
        Ok(())
    };
    let doc = VerifyDoc {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        model: physics.model.name(),
        all_pass: verdict.is_ok(),
        checks: &checks,
    };
    let mut table = Table::new(["name", "value", "threshold", "pass", "gating", "converged"]);
    for c in &checks {
        table.push(vec![
            Cell::Text(c.name.clone()),
            Cell::Num(c.value),
            Cell::Num(c.threshold),
            Cell::Bool(c.pass),
            Cell::Bool(c.gating),
            Cell::Bool(c.converged),
        ]);
    }
    Ok((Rendered::new(&doc, table), verdict))
}

fn morse_checks(
    physics: &Physics,
    grid: &RadialGrid,
    kappa_override: Option<i32>,
) -> CliResult<Vec<Check>> {
    let model = physics.morse()?;
    let kappa = physics.kappa_or(-1);
    let levels = model.spectrum().levels;
    if levels.is_empty() {
        return Err(CliError::Invalid(
            "the Morse parameters admit no bound level".into(),
        ));
    }
    let m = model.params().mass();
    let e = model.params().charge();
    let mut checks = Vec::new();

    for level in levels.iter().take(6) {
        let phi = sample_profile(grid, |r| model.upper(r.re, level.n))?;
        let v = sample_profile(grid, |r| Ok(model.effective_potential(r.re, level.energy)))?;
        let ev = Complex64::new(level.energy.powi(2) - m * m, 0.0);
        let rep = residual(&phi, &v, ev)?;
        checks.push(Check::new(
            format!("residual_n{}", level.n),
            rep.relative,
            RESIDUAL_TOL,
            true,
        ));
    }

    let shooting_grid = RadialGrid::real(grid.x_min(), grid.x_max(), 2 * grid.len() + 1)?;
    for level in levels.iter().take(5) {
        let guess = Complex64::new(level.energy + 0.05, 0.0);
        let name = format!("shooting_n{}", level.n);
        match shoot_morse(guess, &model, &shooting_grid, &ShootingOptions::default()) {
            Ok(res) => {
                let rel = (res.energy.re - level.energy).abs() / level.energy.abs().max(1e-300);
                checks.push(Check::new(name, rel, SHOOTING_TOL, true));
                checks.push(Check::new(
                    format!("shooting_imag_n{}", level.n),
                    res.energy.im,
                    IMAG_TOL,
                    true,
                ));
            }
            Err(CoreError::NoConvergence { .. } | CoreError::BlowUp { .. }) => {
                checks.push(Check::diverged(name, SHOOTING_TOL));
            }
            Err(other) => return Err(other.into()),
        }
    }

    let gating = model.reduction_consistent();
    let ev = sample_profile(grid, |r| Ok(model.potential().value(r.re) * e))?;
    let ea = sample_profile(grid, |r| {
        gauge_field_morse(
            model.potential().value(r.re),
            e,
            kappa,
            r.re,
            model.transform(),
        )
    })?;
    let checked_kappa = kappa_override.unwrap_or(kappa);
    for level in &levels {
        let pu = sample_profile(grid, |r| model.upper(r.re, level.n))?;
        let pl = sample_profile(grid, |r| model.lower(r.re, level.n))?;
        let sp = reconstruct(&pu, &pl, model.transform(), Flavor::RealMix)?;
        let rep = verify_first_order(
            &sp,
            &ev,
            &ea,
            checked_kappa,
            model.params(),
            level.energy,
            Stencil::default(),
        )?;
        checks.push(Check::new(
            format!("first_order_n{}", level.n),
            rep.max(),
            CLOSURE_TOL,
            gating,
        ));
    }
    Ok(checks)
}

fn coulomb_checks(
    physics: &Physics,
    grid: &RadialGrid,
    kappa_override: Option<i32>,
) -> CliResult<Vec<Check>> {
    let kappa = physics.kappa_or(-1);
    let model = physics.coulomb(kappa)?;
    let checked: CoulombModel = match kappa_override {
        Some(k) => physics.coulomb(k)?,
        None => model,
    };
    let m = model.params().mass();
    let mut checks = Vec::new();
    for n_r in 0..=2 {
        let energy = model.energy_radial(n_r)?.energy;
        let phi = sample_profile(grid, |r| model.upper(r, n_r, energy))?;
        let v = sample_profile(grid, |r| checked.effective_potential(r, energy))?;
        let e = Complex64::new(energy * energy - m * m, 0.0);
        let rep = residual(&phi, &v, e)?;
        checks.push(Check::new(
            format!("residual_n{n_r}"),
            rep.relative,
            RESIDUAL_TOL,
            true,
        ));
    }

    checks.push(Check::new(
        "gamma_constraint_residual",
        model.gamma_constraint_residual(),
        1e-12,
        false,
    ));

    let g = model.first_order_coupling();
    let gamma = model.gamma();
    let closes = (g * (g - 1.0) - gamma * (gamma + 1.0)).abs() <= 1e-9 * gamma * (gamma + 1.0);
    let energy = model.energy_radial(0)?.energy;
    let pu = sample_profile(grid, |r| model.upper(r, 0, energy))?;
    let pl = lower_from_upper(
        &pu,
        LowerContext::Coulomb(&model),
        energy,
        Stencil::default(),
    )?;
    let rep = verify_coulomb_mixed(&pu, &pl, &model, energy, Stencil::default())?;
    checks.push(Check::new("mixed_pair_n0", rep.max(), CLOSURE_TOL, closes));
    Ok(checks)
}
