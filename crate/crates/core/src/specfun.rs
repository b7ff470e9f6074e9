//! Generalized Laguerre polynomials L_k^α(z) for complex z and real order α.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Highest degree accepted by [`laguerre`].
pub const MAX_DEGREE: usize = 64;

/// One evaluated value together with its inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreEval {
    pub degree: usize,
    pub order: f64,
    pub argument: Complex64,
    pub value: Complex64,
}

impl LaguerreEval {
    pub fn compute(degree: usize, order: f64, argument: Complex64) -> Result<Self> {
        Ok(Self {
            degree,
            order,
            argument,
            value: laguerre(degree, order, argument)?,
        })
    }
}

/// L_k^α(z) by the ascending three-term recurrence
/// (k+1) L_{k+1} = (2k + 1 + α − z) L_k − (k + α) L_{k−1}.
pub fn laguerre(k: usize, alpha: f64, z: Complex64) -> Result<Complex64> {
    if k == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    Ok(laguerre_pair(k, alpha, z)?.0)
}

/// (L_k^α(z), L_{k−1}^α(z)) from a single recurrence pass; requires k ≥ 1.
pub fn laguerre_pair(k: usize, alpha: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    if k > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(k));
    }
    if k == 0 {
        return Err(Error::InvalidParameter {
            name: "k",
            reason: "laguerre_pair needs degree >= 1".into(),
        });
    }
    let mut prev = Complex64::new(1.0, 0.0);
    let mut cur = -z + (1.0 + alpha);
    for i in 1..k {
        let i = i as f64;
        let next = ((-z + (2.0 * i + 1.0 + alpha)) * cur - prev * (i + alpha)) / (i + 1.0);
        prev = cur;
        cur = next;
    }
    Ok((cur, prev))
}
