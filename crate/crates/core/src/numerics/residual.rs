use num_complex::Complex64;

use super::fd::{second_derivative, Stencil};
use crate::error::{Error, Result};
use crate::grid::{ComplexProfile, RadialGrid};

/// Residual of −φ'' + V_eff φ − Eφ = 0 on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub max_abs_residual: f64,
    /// max |φ''| over the nodes where the residual is measured.
    pub scale: f64,
    pub relative: f64,
    pub grid: RadialGrid,
    /// φ'' vanished identically; `relative` is then 0 by convention.
    pub trivial: bool,
}

/// [`residual_with`] using the default (eighth-order) stencil.
pub fn residual(
    phi: &ComplexProfile,
    v_eff: &ComplexProfile,
    energy: Complex64,
) -> Result<ResidualReport> {
    residual_with(phi, v_eff, energy, Stencil::default())
}

/// Evaluates R = −φ'' + V_eff φ − Eφ with centred differences. The `half_width`
/// nodes at each end are excluded from the maximum.
pub fn residual_with(
    phi: &ComplexProfile,
    v_eff: &ComplexProfile,
    energy: Complex64,
    stencil: Stencil,
) -> Result<ResidualReport> {
    phi.same_grid(v_eff)?;
    let grid = *phi.grid();
    let needed = stencil.points().max(5);
    if grid.len() < needed {
        return Err(Error::GridTooSmall {
            points: grid.len(),
            needed,
        });
    }
    let d2 = second_derivative(phi.values(), grid.step(), stencil);
    let half = stencil.half_width();
    let mut max_abs_residual = 0.0f64;
    let mut scale = 0.0f64;
    let interior = half..grid.len() - half;
    for ((&dd, &f), &v) in d2[interior.clone()]
        .iter()
        .zip(&phi.values()[interior.clone()])
        .zip(&v_eff.values()[interior])
    {
        let r = -dd + (v - energy) * f;
        max_abs_residual = max_abs_residual.max(r.norm());
        scale = scale.max(dd.norm());
    }
    let trivial = scale == 0.0;
    let relative = if trivial {
        0.0
    } else {
        max_abs_residual / scale
    };
    Ok(ResidualReport {
        max_abs_residual,
        scale,
        relative,
        grid,
        trivial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(grid: RadialGrid, f: impl Fn(f64) -> Complex64) -> ComplexProfile {
        ComplexProfile::new(grid, grid.xs().map(f).collect()).unwrap()
    }

    #[test]
    fn zero_function_is_trivial() {
        let g = RadialGrid::real(0.0, 1.0, 20).unwrap();
        let zero = ComplexProfile::zeros(g);
        let rep = residual(&zero, &zero, Complex64::new(1.0, 0.0)).unwrap();
        assert!(rep.trivial);
        assert_eq!(rep.relative, 0.0);
    }

    #[test]
    fn harmonic_solution() {
        // sin(2x) solves -phi'' = 4 phi.
        let g = RadialGrid::real(0.0, 3.0, 400).unwrap();
        let phi = profile(g, |x| Complex64::new((2.0 * x).sin(), 0.0));
        let v = profile(g, |_| Complex64::new(0.0, 0.0));
        let rep = residual(&phi, &v, Complex64::new(4.0, 0.0)).unwrap();
        assert!(rep.relative < 1e-10, "{}", rep.relative);
        let off = residual(&phi, &v, Complex64::new(4.01, 0.0)).unwrap();
        assert!(off.relative > 1e-3);
    }

    #[test]
    fn grid_checks() {
        let g = RadialGrid::real(0.0, 1.0, 6).unwrap();
        let z = ComplexProfile::zeros(g);
        assert!(matches!(
            residual_with(&z, &z, Complex64::new(0.0, 0.0), Stencil::Eighth),
            Err(Error::GridTooSmall { .. })
        ));
        assert!(residual_with(&z, &z, Complex64::new(0.0, 0.0), Stencil::Fourth).is_ok());
        let g2 = RadialGrid::real(0.0, 2.0, 6).unwrap();
        assert_eq!(
            residual_with(
                &z,
                &ComplexProfile::zeros(g2),
                Complex64::new(0.0, 0.0),
                Stencil::Fourth
            ),
            Err(Error::GridMismatch)
        );
    }
}
