//! Two-sided shooting with complex Newton iteration on the matching Wronskian.
//!
//! Both ends are seeded from the analytic asymptotics: z^D e^{−z/2} on the left,
//! where |z| is large, and z^s with s = √(m² − E_r²) on the right, where z → 0.
//! The Wronskian is multiplied by z_L^D z_R^s so that both solutions carry their
//! asymptotic normalization; this keeps W(E_r) free of the exponential E_r-dependence
//! that a unit seed would introduce. Growth along the way is absorbed by
//! power-of-two rescaling whose schedule is recorded at E_r and replayed at
//! E_r + h, so the difference quotient sees a single holomorphic function.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::morse::MorseModel;

const RESCALE_ABOVE: f64 = 1.0e60;

/// Controls for [`shoot_morse`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingOptions {
    /// Position of the matching node as a fraction of the domain.
    pub match_fraction: f64,
    pub max_iterations: usize,
    /// Convergence threshold on the relative Newton step |W/W'| / max(1, |E_r|).
    pub tolerance: f64,
}

impl Default for ShootingOptions {
    fn default() -> Self {
        Self {
            match_fraction: 0.5,
            max_iterations: 50,
            tolerance: 1e-10,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShootingResult {
    pub energy: Complex64,
    pub iterations: usize,
    /// |W/W'| / max(1, |E_r|) at the last iterate before the final update.
    pub match_defect: f64,
    pub converged: bool,
    pub defect_history: Vec<f64>,
}

/// Finds the E_r near `guess` at which the left and right solutions of
/// −φ'' + V_eff(r; E_r)φ = (E_r² − m²)φ join smoothly. V_eff is rebuilt at every
/// trial energy since it depends on E_r.
pub fn shoot_morse(
    guess: Complex64,
    model: &MorseModel,
    grid: &RadialGrid,
    options: &ShootingOptions,
) -> Result<ShootingResult> {
    if grid.theta() != 0.0 {
        return Err(Error::InvalidParameter {
            name: "grid",
            reason: "shooting runs on the real Morse line (theta = 0)".into(),
        });
    }
    if !(0.0..=1.0).contains(&options.match_fraction) {
        return Err(Error::InvalidParameter {
            name: "match_fraction",
            reason: format!("must lie in [0, 1], got {}", options.match_fraction),
        });
    }
    let n = grid.len();
    let matching = (((n - 1) as f64 * options.match_fraction).round() as usize).clamp(1, n - 2);
    let shooter = Shooter {
        model,
        grid,
        matching,
    };

    let mut energy = guess;
    let mut history = Vec::new();
    for iteration in 1..=options.max_iterations {
        let mut plan = RescalePlan::new(n);
        let w = shooter.wronskian(energy, &mut plan, true)?;
        let h = 1e-7 * energy.norm().max(1.0);
        let w_shifted = shooter.wronskian(energy + h, &mut plan, false)?;
        let slope = (w_shifted - w) / h;
        if !(slope.re.is_finite() && slope.im.is_finite()) || slope.norm() == 0.0 {
            return Err(Error::NoConvergence {
                iterations: iteration,
                defect: f64::INFINITY,
                last: energy,
            });
        }
        let step = w / slope;
        let defect = step.norm() / energy.norm().max(1.0);
        history.push(defect);
        energy -= step;
        if defect < options.tolerance {
            return Ok(ShootingResult {
                energy,
                iterations: iteration,
                match_defect: defect,
                converged: true,
                defect_history: history,
            });
        }
    }
    Err(Error::NoConvergence {
        iterations: options.max_iterations,
        defect: history.last().copied().unwrap_or(f64::INFINITY),
        last: energy,
    })
}

/// Rescaling exponents per integration step, one table for each side.
struct RescalePlan {
    left: Vec<i32>,
    right: Vec<i32>,
}

impl RescalePlan {
    fn new(n: usize) -> Self {
        Self {
            left: vec![0; n],
            right: vec![0; n],
        }
    }
}

struct Shooter<'a> {
    model: &'a MorseModel,
    grid: &'a RadialGrid,
    matching: usize,
}

type State = [Complex64; 2];

impl Shooter<'_> {
    fn wronskian(
        &self,
        energy: Complex64,
        plan: &mut RescalePlan,
        record: bool,
    ) -> Result<Complex64> {
        let m = self.model.params().mass();
        let e_nonrel = energy * energy - m * m;
        let q = |x: f64| self.model.effective_potential_complex(x, energy) - e_nonrel;
        let d = -energy * self.model.params().charge();
        let s = (-e_nonrel).sqrt();
        let h = self.grid.step();
        let last = self.grid.len() - 1;

        let z_left = self.model.z(self.grid.x_min());
        let mut left: State = [Complex64::new(1.0, 0.0), z_left * 0.5 - d];
        for k in 0..self.matching {
            left = rk4_step(&q, self.grid.x(k), h, left);
            apply_rescale(&mut left, &mut plan.left[k], record, self.grid.x(k + 1))?;
        }

        let z_right = self.model.z(self.grid.x_max());
        let mut right: State = [Complex64::new(1.0, 0.0), -s];
        for k in (self.matching + 1..=last).rev() {
            right = rk4_step(&q, self.grid.x(k), -h, right);
            apply_rescale(&mut right, &mut plan.right[k], record, self.grid.x(k - 1))?;
        }

        let norm = (d * z_left.ln() + s * z_right.ln()).exp();
        let w = (left[0] * right[1] - left[1] * right[0]) * norm;
        if !(w.re.is_finite() && w.im.is_finite()) {
            return Err(Error::BlowUp {
                x: self.grid.x(self.matching),
            });
        }
        Ok(w)
    }
}

fn rk4_step(q: &impl Fn(f64) -> Complex64, x: f64, h: f64, y: State) -> State {
    let f = |qx: Complex64, y: State| -> State { [y[1], qx * y[0]] };
    let q0 = q(x);
    let qm = q(x + 0.5 * h);
    let q1 = q(x + h);
    let k1 = f(q0, y);
    let k2 = f(qm, [y[0] + k1[0] * (0.5 * h), y[1] + k1[1] * (0.5 * h)]);
    let k3 = f(qm, [y[0] + k2[0] * (0.5 * h), y[1] + k2[1] * (0.5 * h)]);
    let k4 = f(q1, [y[0] + k3[0] * h, y[1] + k3[1] * h]);
    let w = h / 6.0;
    [
        y[0] + (k1[0] + k2[0] * 2.0 + k3[0] * 2.0 + k4[0]) * w,
        y[1] + (k1[1] + k2[1] * 2.0 + k3[1] * 2.0 + k4[1]) * w,
    ]
}

fn apply_rescale(y: &mut State, exponent: &mut i32, record: bool, x: f64) -> Result<()> {
    if record {
        let mag = y[0].norm().max(y[1].norm());
        *exponent = if mag > RESCALE_ABOVE {
            mag.log2().ceil() as i32
        } else {
            0
        };
    }
    if *exponent != 0 {
        let factor = 2f64.powi(-*exponent);
        y[0] *= factor;
        y[1] *= factor;
    }
    let finite = y.iter().all(|c| c.re.is_finite() && c.im.is_finite());
    if finite {
        Ok(())
    } else {
        Err(Error::BlowUp { x })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morse::MorsePotential;
    use crate::params::PhysicalParams;
    use crate::transform::TransformParams;
    use std::f64::consts::PI;

    fn model(eta: f64) -> MorseModel {
        MorseModel::new(
            PhysicalParams::morse(10.0, -1.0).unwrap(),
            TransformParams::from_angle(3.0 * PI / 8.0).unwrap(),
            MorsePotential::new(1.0, eta).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn exact_guess_converges_fast() {
        let grid = RadialGrid::real(-8.0, 12.0, 4001).unwrap();
        let res = shoot_morse(
            Complex64::new(8.0, 0.0),
            &model(0.3),
            &grid,
            &ShootingOptions::default(),
        )
        .unwrap();
        assert!(res.converged);
        assert!(res.iterations <= 3, "{} iterations", res.iterations);
        assert!((res.energy - 8.0).norm() < 1e-7, "{}", res.energy);
    }

    #[test]
    fn rejects_contour_grid() {
        let grid = RadialGrid::new(-8.0, 12.0, 101, 1.0).unwrap();
        assert!(shoot_morse(
            Complex64::new(8.0, 0.0),
            &model(0.3),
            &grid,
            &ShootingOptions::default()
        )
        .is_err());
    }

    #[test]
    fn iteration_cap_reports_no_convergence() {
        let grid = RadialGrid::real(-8.0, 12.0, 801).unwrap();
        let opts = ShootingOptions {
            max_iterations: 1,
            ..ShootingOptions::default()
        };
        let err = shoot_morse(Complex64::new(8.3, 0.0), &model(0.3), &grid, &opts).unwrap_err();
        assert!(matches!(err, Error::NoConvergence { iterations: 1, .. }));
    }
}
