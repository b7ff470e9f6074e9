//! Numerical verification: finite-difference residuals of the reduced second-order
//! equation, profile sampling, and a shooting eigenvalue search for the Morse problem.

pub mod fd;
mod residual;
mod shooting;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{ComplexProfile, RadialGrid};

pub use fd::Stencil;
pub use residual::{residual, residual_with, ResidualReport};
pub use shooting::{shoot_morse, ShootingOptions, ShootingResult};

/// Evaluates `f` at every node r_k = x_k − iθ.
pub fn sample_profile<F>(grid: &RadialGrid, f: F) -> Result<ComplexProfile>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let values = grid
        .nodes()
        .enumerate()
        .map(|(index, r)| {
            f(r).map_err(|e| Error::AtNode {
                index,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ComplexProfile::new(*grid, values)
}
