//! Dirac particle in the imaginary Coulomb potential eV = iZα/r.
//!
//! Under the complex mixing U = [[a, ib], [ib, a]] the upper component obeys
//!
//! ```text
//! −φ'' + [γ(γ + 1)/r² + 2iqE_r/r] φ = (E_r² − m²) φ,   q = Zα(S² − C²),
//! ```
//!
//! the PT-symmetric Coulomb problem with E = A²/4N², A = 2qE_r. Solving for E_r gives
//! E_r = m[1 − q²/N²]^{−1/2}, which is real whenever q² < N², for every Z.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::numerics::{residual, sample_profile};
use crate::params::PhysicalParams;
use crate::specfun::laguerre;
use crate::transform::TransformParams;

/// Contour shift used when none is given.
pub const DEFAULT_THETA: f64 = 1.0;

/// γ = +√(κ² + Z²α²).
pub fn gamma_of(kappa: i32, alpha: f64, atomic_number: f64) -> f64 {
    let za = alpha * atomic_number;
    (f64::from(kappa).powi(2) + za * za).sqrt()
}

/// E_r = m[1 − q²/N²]^{−1/2}.
pub fn coulomb_energy(n_eff: f64, q: f64, m: f64) -> Result<f64> {
    if !(n_eff > 0.0 && n_eff.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "n_eff",
            reason: format!("must be positive and finite, got {n_eff}"),
        });
    }
    let q_sq = q * q;
    let n_eff_sq = n_eff * n_eff;
    if q_sq >= n_eff_sq {
        return Err(Error::RealityViolation { q_sq, n_eff_sq });
    }
    Ok(m / (1.0 - q_sq / n_eff_sq).sqrt())
}

/// Weak-coupling form of the spectrum,
/// m(1 + q²/2 [1/n² + Z²α²/(2n³) (1/m + 3(S² − C²)²/(4n))]), with (S² − C²)² = q²/Z²α².
pub fn coulomb_energy_expansion(n: u32, q: f64, z_alpha: f64, m: f64) -> f64 {
    let n = f64::from(n);
    let bracket =
        1.0 / (n * n) + z_alpha * z_alpha / (2.0 * n.powi(3) * m) + 3.0 * q * q / (8.0 * n.powi(4));
    m * (1.0 + 0.5 * q * q * bracket)
}

/// Which quantum numbers a level was requested with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Labeling {
    /// N = n − j − ½ + √((j + ½)² + Z²α²).
    Principal { n: u32, twice_j: u32 },
    /// N = n_r + γ + 1.
    Radial { n_r: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombLevel {
    pub n_eff: f64,
    pub energy: f64,
    pub label: Labeling,
}

/// Physical parameters, complex mixing and κ for the imaginary Coulomb problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombModel {
    params: PhysicalParams,
    transform: TransformParams,
    kappa: i32,
    gamma: f64,
    q: f64,
    sigma: Option<f64>,
}

impl CoulombModel {
    /// Also fixes the sign σ of the scaled variable ρ = σ·iAr/N by comparing the
    /// residuals of both choices on a short contour. σ stays unset when q = 0.
    pub fn new(params: PhysicalParams, transform: TransformParams, kappa: i32) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::InvalidParameter {
                name: "kappa",
                reason: "must be nonzero".into(),
            });
        }
        let gamma = gamma_of(kappa, params.alpha(), params.atomic_number());
        let q = params.z_alpha() * transform.asymmetry();
        let mut model = Self {
            params,
            transform,
            kappa,
            gamma,
            q,
            sigma: None,
        };
        if q != 0.0 {
            model.sigma = Some(model.probe_sigma()?);
        }
        Ok(model)
    }

    fn probe_sigma(&self) -> Result<f64> {
        let energy = self.energy_radial(0)?.energy;
        let grid = RadialGrid::new(0.5, 3.0, 81, DEFAULT_THETA)?;
        let v = sample_profile(&grid, |r| self.effective_potential(r, energy))?;
        let e_nonrel = Complex64::new(energy * energy - self.params.mass().powi(2), 0.0);
        let mut best = (f64::INFINITY, -1.0);
        for sigma in [-1.0, 1.0] {
            let phi = sample_profile(&grid, |r| self.upper_with_sign(r, 0, energy, sigma))?;
            let rel = residual(&phi, &v, e_nonrel)?.relative;
            if rel < best.0 {
                best = (rel, sigma);
            }
        }
        Ok(best.1)
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    pub fn transform(&self) -> &TransformParams {
        &self.transform
    }

    pub fn kappa(&self) -> i32 {
        self.kappa
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// q = Zα(S² − C²).
    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn sigma(&self) -> Option<f64> {
        self.sigma
    }

    /// g = (S² − C²)Zα/S, the 1/r coefficient produced by the mixed first-order pair.
    pub fn first_order_coupling(&self) -> f64 {
        self.q / self.transform.s()
    }

    /// g − γ. Identifying g with γ is not what makes the pair reduce to the upper
    /// equation; that needs g(g − 1) = γ(γ + 1), i.e. g = −γ or g = γ + 1
    /// (see [`closing_transform`]).
    pub fn gamma_constraint_residual(&self) -> f64 {
        self.first_order_coupling() - self.gamma
    }

    /// Level with N = n − j − ½ + √((j + ½)² + Z²α²), requiring n ≥ j + ½.
    pub fn energy_labeled(&self, n: u32, twice_j: u32) -> Result<CoulombLevel> {
        if twice_j.is_multiple_of(2) {
            return Err(Error::InvalidParameter {
                name: "j",
                reason: format!("must be half-integer, got {twice_j}/2"),
            });
        }
        let j_half = f64::from(twice_j + 1) / 2.0;
        if f64::from(n) < j_half {
            return Err(Error::InvalidParameter {
                name: "n",
                reason: format!("n = {n} must be at least j + 1/2 = {j_half}"),
            });
        }
        let za = self.params.z_alpha();
        let n_eff = f64::from(n) - j_half + (j_half * j_half + za * za).sqrt();
        Ok(CoulombLevel {
            n_eff,
            energy: coulomb_energy(n_eff, self.q, self.params.mass())?,
            label: Labeling::Principal { n, twice_j },
        })
    }

    /// Level with N = n_r + γ + 1.
    pub fn energy_radial(&self, n_r: u32) -> Result<CoulombLevel> {
        let n_eff = f64::from(n_r) + self.gamma + 1.0;
        Ok(CoulombLevel {
            n_eff,
            energy: coulomb_energy(n_eff, self.q, self.params.mass())?,
            label: Labeling::Radial { n_r },
        })
    }

    /// Closed form for the states n = j + ½: m√[(n² + Z²α²)/(n² + (2CSZα)²)].
    pub fn energy_special(&self, n: u32) -> f64 {
        let n_sq = f64::from(n).powi(2);
        let za_sq = self.params.z_alpha().powi(2);
        self.params.mass() * ((n_sq + za_sq) / (n_sq + self.transform.overlap_sq() * za_sq)).sqrt()
    }

    /// γ(γ + 1)/r² + 2iqE_r/r.
    pub fn effective_potential(&self, r: Complex64, energy: f64) -> Result<Complex64> {
        if r.norm() == 0.0 {
            return Err(Error::Domain(
                "Coulomb effective potential is singular at r = 0".into(),
            ));
        }
        let g = self.gamma;
        Ok(g * (g + 1.0) / (r * r) + Complex64::new(0.0, 2.0 * self.q * energy) / r)
    }

    /// φᵘ = ρ^{1+γ} e^{−ρ/2} L_{n_r}^{2γ+1}(ρ), ρ = σ·iAr/N, A = 2qE_r, N = n_r + γ + 1.
    pub fn upper(&self, r: Complex64, n_r: u32, energy: f64) -> Result<Complex64> {
        let sigma = self.sigma.ok_or(Error::DegenerateCoupling)?;
        self.upper_with_sign(r, n_r, energy, sigma)
    }

    fn upper_with_sign(
        &self,
        r: Complex64,
        n_r: u32,
        energy: f64,
        sigma: f64,
    ) -> Result<Complex64> {
        if r.norm() == 0.0 {
            return Err(Error::Domain(
                "Coulomb eigenfunction is evaluated for r != 0".into(),
            ));
        }
        let n_eff = f64::from(n_r) + self.gamma + 1.0;
        let a = 2.0 * self.q * energy;
        let rho = Complex64::new(0.0, sigma * a / n_eff) * r;
        if rho.norm() == 0.0 {
            return Err(Error::DegenerateCoupling);
        }
        let order = 2.0 * self.gamma + 1.0;
        let poly = laguerre(n_r as usize, order, rho)?;
        Ok((rho.ln() * (1.0 + self.gamma) - rho * 0.5).exp() * poly)
    }
}

/// Mixing for which the first-order pair reduces exactly to the upper equation:
/// (S² − C²)Zα/S = −γ, i.e. 2ZαS² + γS − Zα = 0 with the root in (0, 1).
pub fn closing_transform(z_alpha: f64, gamma: f64) -> Result<TransformParams> {
    if z_alpha.is_nan() || z_alpha <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "z_alpha",
            reason: format!("must be positive, got {z_alpha}"),
        });
    }
    let s = ((gamma * gamma + 8.0 * z_alpha * z_alpha).sqrt() - gamma) / (4.0 * z_alpha);
    let c = (1.0 - s * s).sqrt();
    TransformParams::from_angle(0.5 * s.atan2(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn params(za: f64) -> PhysicalParams {
        PhysicalParams::new(1.0, -1.0, 1.0, za).unwrap()
    }

    fn diag() -> TransformParams {
        TransformParams::new(0.8, 0.6).unwrap()
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_of(1, 1.0 / 137.036, 0.0), 1.0);
        assert!((gamma_of(1, 1.0, 0.75) - 1.25).abs() < 1e-15);
        assert_eq!(gamma_of(-2, 0.5, 0.0), 2.0);
    }

    #[test]
    fn energy_examples() {
        assert_eq!(coulomb_energy(3.7, 0.0, 2.0).unwrap(), 2.0);
        assert!((coulomb_energy(1.0, 0.6, 1.0).unwrap() - 1.25).abs() < 1e-15);
        assert!(matches!(
            coulomb_energy(1.0, 1.0, 1.0),
            Err(Error::RealityViolation { .. })
        ));
        assert!(coulomb_energy(0.0, 0.1, 1.0).is_err());
    }

    #[test]
    fn effective_potential_hand_value() {
        // gamma = 1.25 from kappa = 1, Z alpha = 0.75; q E_r = 0.75.
        let t = TransformParams::from_angle(0.3).unwrap();
        let model = CoulombModel::new(params(0.75), t, 1).unwrap();
        let energy = 0.75 / model.q();
        let r = Complex64::new(1.0, -0.5);
        let v = model.effective_potential(r, energy).unwrap();
        let want = 2.8125 / (r * r) + Complex64::new(0.0, 1.5) / r;
        assert!((v - want).norm() < 1e-13);
        // 2.8125 / (0.75 - i) + 1.5i / (1 - 0.5i), expanded by hand.
        assert!((v - Complex64::new(0.75, 3.0)).norm() < 1e-13, "{v}");
        assert!(model
            .effective_potential(Complex64::new(0.0, 0.0), energy)
            .is_err());
    }

    #[test]
    fn vanishing_coupling_leaves_centrifugal_term() {
        let sym = TransformParams::from_angle(PI / 8.0).unwrap();
        let model = CoulombModel::new(params(0.5), sym, -1).unwrap();
        let r = Complex64::new(2.0, -1.0);
        let v = model.effective_potential(r, 3.0).unwrap();
        let g = model.gamma();
        assert!((v - g * (g + 1.0) / (r * r)).norm() < 1e-14);
    }

    #[test]
    fn labeled_levels() {
        let t = TransformParams::new(1.0 - 1e-16, 1e-8).unwrap();
        let free = CoulombModel::new(params(0.0), t, -1).unwrap();
        assert_eq!(free.energy_labeled(1, 1).unwrap().energy, 1.0);

        // S -> 0, C -> 1 so that q -> -Z alpha.
        let t = TransformParams::from_angle(1e-9).unwrap();
        let model = CoulombModel::new(params(0.5), t, -1).unwrap();
        let level = model.energy_labeled(1, 1).unwrap();
        assert!((level.n_eff - 1.25f64.sqrt()).abs() < 1e-15);
        assert!((level.energy - 1.118_033_988_749_895).abs() < 1e-12);
        assert!((model.energy_special(1) - level.energy).abs() < 1e-12);

        let second = model.energy_labeled(2, 1).unwrap();
        let n = 1.0 + 1.25f64.sqrt();
        let want = (1.0 - 0.25 / (n * n)).powf(-0.5);
        assert!((second.energy - want).abs() < 1e-14);

        assert!(model.energy_labeled(1, 3).is_err());
        assert!(model.energy_labeled(2, 2).is_err());
    }

    #[test]
    fn special_form_limits() {
        let t = TransformParams::from_angle(PI / 8.0).unwrap();
        let model = CoulombModel::new(params(0.9), t, -1).unwrap();
        assert!((model.energy_special(2) - 1.0).abs() < 1e-15);
        let free = CoulombModel::new(params(0.0), diag(), -1).unwrap();
        assert_eq!(free.energy_special(3), 1.0);
    }

    #[test]
    fn expansion_at_zero_coupling() {
        assert_eq!(coulomb_energy_expansion(1, 0.0, 0.0, 1.7), 1.7);
        let lo = coulomb_energy_expansion(2, 0.05, 0.06, 1.0);
        let hi = coulomb_energy_expansion(2, 0.1, 0.12, 1.0);
        assert!(hi > lo);
    }

    #[test]
    fn sign_is_fixed_by_residual() {
        let model = CoulombModel::new(params(0.5), diag(), -1).unwrap();
        assert_eq!(model.sigma(), Some(-1.0));
        let free = CoulombModel::new(params(0.0), diag(), -1).unwrap();
        assert_eq!(free.sigma(), None);
        assert!(matches!(
            free.upper(Complex64::new(1.0, -1.0), 0, 1.0),
            Err(Error::DegenerateCoupling)
        ));
    }

    #[test]
    fn ground_state_is_pure_power_times_exponential() {
        let model = CoulombModel::new(params(0.5), diag(), -1).unwrap();
        let level = model.energy_radial(0).unwrap();
        let r = Complex64::new(2.0, -1.0);
        let rho = Complex64::new(0.0, -2.0 * model.q() * level.energy / level.n_eff) * r;
        let want = rho.powf(1.0 + model.gamma()) * (-rho / 2.0).exp();
        let got = model.upper(r, 0, level.energy).unwrap();
        assert!((got - want).norm() < 1e-12 * want.norm());
    }

    #[test]
    fn closing_transform_solves_constraint() {
        for &za in &[0.05, 0.5, 1.4] {
            for &kappa in &[-1, 1, -3] {
                let gamma = gamma_of(kappa, 1.0, za);
                let t = closing_transform(za, gamma).unwrap();
                let model = CoulombModel::new(params(za), t, kappa).unwrap();
                let g = model.first_order_coupling();
                assert!((g + gamma).abs() < 1e-12, "za={za} kappa={kappa} g={g}");
                assert!((g * (g - 1.0) - gamma * (gamma + 1.0)).abs() < 1e-11);
            }
        }
        assert!(closing_transform(0.0, 1.0).is_err());
    }

    #[test]
    fn constraint_residual_is_reported() {
        let model = CoulombModel::new(params(0.5), diag(), -1).unwrap();
        let g = 0.8432 * 0.5 / 0.96;
        assert!((model.gamma_constraint_residual() - (g - 1.25f64.sqrt())).abs() < 1e-12);
    }
}
