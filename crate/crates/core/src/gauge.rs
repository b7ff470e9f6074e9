//! Radial gauge field eA(r) recovered from the gauge-fixing conditions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::transform::TransformParams;

/// eA(r) = eV(r)/S − κ/r for the real-rotation (Morse) construction.
///
/// `r` is the Morse line coordinate, so negative values are accepted; only `r = 0` is rejected.
pub fn gauge_field_morse(
    potential: Complex64,
    charge: f64,
    kappa: i32,
    r: f64,
    t: &TransformParams,
) -> Result<Complex64> {
    if r == 0.0 || !r.is_finite() {
        return Err(Error::Domain(format!(
            "gauge field needs finite r != 0, got {r}"
        )));
    }
    Ok(potential * charge / t.s() - kappa as f64 / r)
}

/// eA(r) = [(C/S)Zα − κ]/r for the imaginary Coulomb potential eV = iZα/r.
pub fn gauge_field_coulomb(
    atomic_number: f64,
    alpha: f64,
    kappa: i32,
    r: Complex64,
    t: &TransformParams,
) -> Result<Complex64> {
    if r.norm() == 0.0 || !(r.re.is_finite() && r.im.is_finite()) {
        return Err(Error::Domain(format!(
            "gauge field needs finite r != 0, got {r}"
        )));
    }
    let coefficient = t.c() / t.s() * atomic_number * alpha - kappa as f64;
    Ok(Complex64::new(coefficient, 0.0) / r)
}
