//! Global unitary mixing of the upper and lower radial components.

use num_complex::Complex64;

use crate::error::{Error, Result};

const UNITARITY_TOL: f64 = 1e-12;

/// Rotation pair (a, b) with a² + b² = 1 and the derived S = 2ab, C = a² − b².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformParams {
    a: f64,
    b: f64,
    s: f64,
    c: f64,
}

impl TransformParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        let norm = a * a + b * b;
        if !norm.is_finite() || (norm - 1.0).abs() > UNITARITY_TOL {
            return Err(Error::NotUnitary { norm });
        }
        let s = 2.0 * a * b;
        if s == 0.0 {
            return Err(Error::SingularMixing("S = 2ab vanishes"));
        }
        let c = a * a - b * b;
        debug_assert!((s * s + c * c - 1.0).abs() < 1e-11);
        Ok(Self { a, b, s, c })
    }

    /// `(cos θ, sin θ)`.
    pub fn from_angle(theta: f64) -> Result<Self> {
        Self::new(theta.cos(), theta.sin())
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// S² − C², the factor multiplying Zα in the Coulomb coupling.
    pub fn asymmetry(&self) -> f64 {
        self.s * self.s - self.c * self.c
    }

    /// (2CS)².
    pub fn overlap_sq(&self) -> f64 {
        let o = 2.0 * self.c * self.s;
        o * o
    }

    /// Real rotation: u₁ = aφᵘ − bφˡ, u₂ = bφᵘ + aφˡ.
    pub fn mix_real(&self, phi_u: Complex64, phi_l: Complex64) -> (Complex64, Complex64) {
        (
            phi_u * self.a - phi_l * self.b,
            phi_u * self.b + phi_l * self.a,
        )
    }

    /// Inverse of [`mix_real`](Self::mix_real).
    pub fn unmix_real(&self, u1: Complex64, u2: Complex64) -> (Complex64, Complex64) {
        (u1 * self.a + u2 * self.b, -u1 * self.b + u2 * self.a)
    }

    /// U = [[a, ib], [ib, a]] applied to (φᵘ, φˡ).
    pub fn mix_complex(&self, phi_u: Complex64, phi_l: Complex64) -> (Complex64, Complex64) {
        let ib = Complex64::new(0.0, self.b);
        (phi_u * self.a + ib * phi_l, ib * phi_u + phi_l * self.a)
    }

    /// Applies U† = [[a, −ib], [−ib, a]].
    pub fn unmix_complex(&self, u1: Complex64, u2: Complex64) -> (Complex64, Complex64) {
        let ib = Complex64::new(0.0, self.b);
        (u1 * self.a - ib * u2, -ib * u1 + u2 * self.a)
    }
}
