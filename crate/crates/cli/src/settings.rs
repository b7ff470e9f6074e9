//! Resolved parameters: command-line flag, then config entry, then model default.

use std::f64::consts::PI;

use complex_dirac::coulomb::CoulombModel;
use complex_dirac::morse::{MorseModel, MorsePotential};
use complex_dirac::{PhysicalParams, RadialGrid, TransformParams, DEFAULT_ALPHA};

use crate::args::{GridArgs, ModelKind, PhysicsArgs};
use crate::config::ConfigFile;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Physics {
    pub model: ModelKind,
    pub mass: f64,
    pub charge: f64,
    pub alpha: f64,
    pub z: f64,
    pub zeta: f64,
    pub eta: f64,
    pub a: f64,
    pub b: f64,
    pub kappa: Option<i32>,
}

/// Whether unset mass and Z fall back to defaults (`verify`) or must be supplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Defaults {
    Required,
    Demo,
}

impl Physics {
    pub fn resolve(
        model: ModelKind,
        args: &PhysicsArgs,
        cfg: &ConfigFile,
        defaults: Defaults,
    ) -> CliResult<Self> {
        let demo = defaults == Defaults::Demo;
        let (mass_default, z_default, a_default, b_default) = match model {
            ModelKind::Morse => (10.0, 0.0, (PI / 8.0).cos(), (PI / 8.0).sin()),
            ModelKind::Coulomb => (1.0, 50.0, 0.8, 0.6),
        };
        let mass = match cfg.pick(args.mass, "mass")? {
            Some(m) => m,
            None if demo => mass_default,
            None => return Err(missing("mass")),
        };
        let z = match cfg.pick(args.z, "z")? {
            Some(z) => z,
            None if demo || model == ModelKind::Morse => z_default,
            None => return Err(missing("z")),
        };
        Ok(Self {
            model,
            mass,
            charge: cfg.pick(args.charge, "charge")?.unwrap_or(-1.0),
            alpha: cfg.pick(args.alpha, "alpha")?.unwrap_or(DEFAULT_ALPHA),
            z,
            zeta: cfg.pick(args.zeta, "zeta")?.unwrap_or(-1.0),
            eta: cfg.pick(args.eta, "eta")?.unwrap_or(0.3),
            a: cfg.pick(args.a, "a")?.unwrap_or(a_default),
            b: cfg.pick(args.b, "b")?.unwrap_or(b_default),
            kappa: cfg.pick(args.kappa, "kappa")?,
        })
    }

    pub fn params(&self) -> CliResult<PhysicalParams> {
        Ok(PhysicalParams::new(
            self.mass,
            self.charge,
            self.alpha,
            self.z,
        )?)
    }

    pub fn transform(&self) -> CliResult<TransformParams> {
        Ok(TransformParams::new(self.a, self.b)?)
    }

    pub fn morse(&self) -> CliResult<MorseModel> {
        Ok(MorseModel::new(
            self.params()?,
            self.transform()?,
            MorsePotential::new(self.zeta, self.eta)?,
        )?)
    }

    pub fn kappa_or(&self, fallback: i32) -> i32 {
        self.kappa.unwrap_or(fallback)
    }

    pub fn coulomb(&self, kappa: i32) -> CliResult<CoulombModel> {
        Ok(CoulombModel::new(self.params()?, self.transform()?, kappa)?)
    }
}

fn missing(flag: &str) -> CliError {
    CliError::Invalid(format!(
        "missing required parameter --{flag} (flag or config key `{flag}`)"
    ))
}

/// Default grids: the full Morse line, or the shifted Coulomb contour.
pub fn grid(model: ModelKind, args: &GridArgs, cfg: &ConfigFile) -> CliResult<RadialGrid> {
    let (x_min, x_max, points, theta) = match model {
        ModelKind::Morse => (-8.0, 12.0, 2000, 0.0),
        ModelKind::Coulomb => (0.1, 20.0, 400, 1.0),
    };
    let theta = cfg.pick(args.theta, "theta")?.unwrap_or(theta);
    if model == ModelKind::Morse && theta != 0.0 {
        return Err(CliError::Invalid(
            "--theta applies to the Coulomb contour only".into(),
        ));
    }
    Ok(RadialGrid::new(
        cfg.pick(args.x_min, "x-min")?.unwrap_or(x_min),
        cfg.pick(args.x_max, "x-max")?.unwrap_or(x_max),
        cfg.pick(args.points, "points")?.unwrap_or(points),
        theta,
    )?)
}

/// `n` or `lo..hi`, inclusive.
pub fn parse_range(text: &str) -> CliResult<Vec<u32>> {
    let bad = || CliError::Invalid(format!("bad level range `{text}`, expected N or LO..HI"));
    match text.split_once("..") {
        None => Ok(vec![text.trim().parse().map_err(|_| bad())?]),
        Some((lo, hi)) => {
            let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
            if hi < lo {
                return Err(bad());
            }
            Ok((lo..=hi).collect())
        }
    }
}

/// Converts j to 2j, requiring a positive half-integer.
pub fn twice_j(j: f64) -> CliResult<u32> {
    let t = 2.0 * j;
    if t < 1.0 || t.fract() != 0.0 || (t as u32).is_multiple_of(2) {
        return Err(CliError::Invalid(format!(
            "j must be 1/2, 3/2, ..., got {j}"
        )));
    }
    Ok(t as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2").unwrap(), vec![2]);
        assert_eq!(parse_range("1..3").unwrap(), vec![1, 2, 3]);
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn half_integers() {
        assert_eq!(twice_j(0.5).unwrap(), 1);
        assert_eq!(twice_j(2.5).unwrap(), 5);
        assert!(twice_j(1.0).is_err());
        assert!(twice_j(0.25).is_err());
    }

    #[test]
    fn flags_override_config() {
        let cfg = ConfigFile::parse("mass=3\neta=0.9").unwrap();
        let args = PhysicsArgs {
            mass: Some(5.0),
            ..Default::default()
        };
        let p = Physics::resolve(ModelKind::Morse, &args, &cfg, Defaults::Required).unwrap();
        assert_eq!((p.mass, p.eta), (5.0, 0.9));
    }

    #[test]
    fn mass_is_required_outside_verify() {
        let cfg = ConfigFile::default();
        let err = Physics::resolve(
            ModelKind::Morse,
            &PhysicsArgs::default(),
            &cfg,
            Defaults::Required,
        )
        .unwrap_err();
        assert!(err.to_string().contains("--mass"));
        assert!(Physics::resolve(
            ModelKind::Morse,
            &PhysicsArgs::default(),
            &cfg,
            Defaults::Demo
        )
        .is_ok());
    }
}
