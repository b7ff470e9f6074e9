//! Dirac particle in the complex Morse potential V(r) = −(ζ + iη)e^{−r}.
//!
//! The reduced second-order equation for the upper component is mapped onto the
//! Schrödinger Morse problem −ψ'' + [B²e^{−2x} − B(1 + 2D)e^{−x}]ψ = Eψ with
//! B = (Ce/S)(ζ + iη), D = −eE_r and E = E_r² − m². Its levels E = −(n − D)²
//! give the real relativistic spectrum
//!
//! ```text
//! E_r,n = [−e n + √((1 + e²) m² − n²)] / (1 + e²)
//! ```
//!
//! which contains neither ζ nor η. Eigenfunctions carry the normalization 𝒩_n = 1.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::specfun::{laguerre, laguerre_pair};
use crate::transform::TransformParams;

/// Closest approach of arg(B) to the principal-branch cut at ±π.
pub const BRANCH_CUT_MARGIN: f64 = 1e-6;

const DENOMINATOR_FLOOR: f64 = 1e-14;

/// Complex strength ζ + iη of V(r) = −(ζ + iη)e^{−r}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorsePotential {
    zeta: f64,
    eta: f64,
}

impl MorsePotential {
    pub fn new(zeta: f64, eta: f64) -> Result<Self> {
        if !(zeta.is_finite() && eta.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "zeta/eta",
                reason: "must be finite".into(),
            });
        }
        if zeta == 0.0 && eta == 0.0 {
            return Err(Error::InvalidParameter {
                name: "zeta/eta",
                reason: "potential strength must not vanish".into(),
            });
        }
        Ok(Self { zeta, eta })
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn strength(&self) -> Complex64 {
        Complex64::new(self.zeta, self.eta)
    }

    /// V(r) = −(ζ + iη)e^{−r}.
    pub fn value(&self, r: f64) -> Complex64 {
        -self.strength() * (-r).exp()
    }
}

/// Parameters of the equivalent Schrödinger Morse problem at a given E_r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseCorrespondence {
    pub b_r: f64,
    pub b_i: f64,
    pub d: f64,
    pub e_nonrel: f64,
}

impl MorseCorrespondence {
    /// B²e^{−2x} − B(1 + 2D)e^{−x}, the Schrödinger Morse potential these parameters describe.
    pub fn schrodinger_potential(&self, x: f64) -> Complex64 {
        let b = Complex64::new(self.b_r, self.b_i);
        b * b * (-2.0 * x).exp() - b * (1.0 + 2.0 * self.d) * (-x).exp()
    }

    /// −(n − D)², the Schrödinger level this correspondence must reproduce.
    pub fn schrodinger_level(&self, n: u32) -> f64 {
        -(n as f64 - self.d).powi(2)
    }
}

/// One level of the closed-form spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseLevel {
    pub n: u32,
    pub energy: f64,
    /// ν_n = −eE_r − n.
    pub nu: f64,
    /// ν_n > 0, i.e. φᵘ vanishes as r → ∞.
    pub bound: bool,
}

/// Levels passing both the reality gate and the ν_n > 0 gate, ordered by n.
#[derive(Debug, Clone, PartialEq)]
pub struct MorseSpectrum {
    pub levels: Vec<MorseLevel>,
    /// Set when no level passes both gates.
    pub empty: bool,
}

/// Closed-form relativistic level n.
pub fn morse_energy(n: u32, p: &PhysicalParams) -> Result<MorseLevel> {
    let (m, e) = (p.mass(), p.charge());
    let nf = n as f64;
    let one_e2 = 1.0 + e * e;
    let discriminant = one_e2 * m * m - nf * nf;
    if discriminant < 0.0 {
        return Err(Error::LevelOutOfRange { n, discriminant });
    }
    let energy = (-e * nf + discriminant.sqrt()) / one_e2;
    let nu = -e * energy - nf;
    Ok(MorseLevel {
        n,
        energy,
        nu,
        bound: nu > 0.0,
    })
}

/// Independent route to E_r: the `+√` root of (1 + e²)E² + 2ne·E + (n² − m²) = 0,
/// obtained by inserting D = −eE_r and E = E_r² − m² into E = −(n − D)².
///
/// The root is taken in cancellation-free form, so it does not share an evaluation
/// path with [`morse_energy`].
pub fn morse_energy_oracle(n: u32, p: &PhysicalParams) -> Result<f64> {
    let (m, e) = (p.mass(), p.charge());
    let nf = n as f64;
    let qa = 1.0 + e * e;
    let qb = 2.0 * nf * e;
    let qc = nf * nf - m * m;
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return Err(Error::NoRealRoot(disc));
    }
    let sq = disc.sqrt();
    if qb <= 0.0 {
        Ok((-qb + sq) / (2.0 * qa))
    } else {
        Ok(2.0 * qc / (-qb - sq))
    }
}

/// All levels n = 0, 1, … passing (1 + e²)m² ≥ n² and ν_n > 0.
pub fn morse_spectrum(p: &PhysicalParams) -> MorseSpectrum {
    let levels: Vec<MorseLevel> = (0u32..)
        .map_while(|n| morse_energy(n, p).ok())
        .filter(|level| level.bound)
        .collect();
    let empty = levels.is_empty();
    MorseSpectrum { levels, empty }
}

/// Parameters, mixing and potential for the complex Morse problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseModel {
    params: PhysicalParams,
    transform: TransformParams,
    potential: MorsePotential,
}

impl MorseModel {
    /// Rejects C = 0 (the quadratic Morse term disappears) and couplings B whose
    /// argument lies within [`BRANCH_CUT_MARGIN`] of ±π.
    pub fn new(
        params: PhysicalParams,
        transform: TransformParams,
        potential: MorsePotential,
    ) -> Result<Self> {
        if transform.c() == 0.0 {
            return Err(Error::SingularMixing("C = a^2 - b^2 vanishes"));
        }
        if params.charge() == 0.0 {
            return Err(Error::SingularMixing(
                "zero charge removes the Morse coupling",
            ));
        }
        let model = Self {
            params,
            transform,
            potential,
        };
        let arg = model.coupling().arg();
        if PI - arg.abs() < BRANCH_CUT_MARGIN {
            return Err(Error::Domain(format!(
                "arg((Ce/S)(zeta + i eta)) = {arg} lies on the branch cut of z^nu"
            )));
        }
        Ok(model)
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    pub fn transform(&self) -> &TransformParams {
        &self.transform
    }

    pub fn potential(&self) -> &MorsePotential {
        &self.potential
    }

    /// Ce/S.
    pub fn ce_over_s(&self) -> f64 {
        self.transform.c() * self.params.charge() / self.transform.s()
    }

    /// B = (Ce/S)(ζ + iη).
    pub fn coupling(&self) -> Complex64 {
        self.potential.strength() * self.ce_over_s()
    }

    pub fn correspondence(&self, energy: f64) -> MorseCorrespondence {
        let b = self.coupling();
        MorseCorrespondence {
            b_r: b.re,
            b_i: b.im,
            d: -self.params.charge() * energy,
            e_nonrel: energy * energy - self.params.mass().powi(2),
        }
    }

    pub fn energy(&self, n: u32) -> Result<MorseLevel> {
        morse_energy(n, &self.params)
    }

    pub fn spectrum(&self) -> MorseSpectrum {
        morse_spectrum(&self.params)
    }

    /// z = 2(Ce/S)(ζ + iη)e^{−r}.
    pub fn z(&self, r: f64) -> Complex64 {
        self.coupling() * (2.0 * (-r).exp())
    }

    /// V_eff(r) = B²e^{−2r} − B(1 − 2eE_r)e^{−r}.
    pub fn effective_potential(&self, r: f64, energy: f64) -> Complex64 {
        self.effective_potential_complex(r, Complex64::new(energy, 0.0))
    }

    /// [`effective_potential`](Self::effective_potential) continued to complex E_r.
    pub fn effective_potential_complex(&self, r: f64, energy: Complex64) -> Complex64 {
        let b = self.coupling();
        let decay = (-r).exp();
        b * b * (decay * decay) - b * (-energy * (2.0 * self.params.charge()) + 1.0) * decay
    }

    /// The effective potential obtained by substituting V(r) directly into the general
    /// reduction (Ce/S·V)² + 2eE_rV − (Ce/S)V'. Its linear term is
    /// −(ζ + iη)(2eE_r + Ce/S)e^{−r}; it agrees with
    /// [`effective_potential`](Self::effective_potential) only when Ce/S = −1 or eE_r = 0.
    pub fn reduced_effective_potential(&self, r: f64, energy: f64) -> Complex64 {
        let e = self.params.charge();
        let k = self.ce_over_s();
        let v = self.potential.value(r);
        let dv = -v;
        let kv = v * k;
        kv * kv + v * (2.0 * e * energy) - dv * k
    }

    /// Difference of the e^{−r} coefficients of the two effective potentials at E_r.
    pub fn linear_coefficient_mismatch(&self, energy: f64) -> Complex64 {
        let k = self.ce_over_s();
        self.potential.strength() * (2.0 * self.params.charge() * energy * (1.0 + k))
    }

    /// True when the printed effective potential coincides with the direct reduction
    /// for every E_r, i.e. Ce/S = −1.
    pub fn reduction_consistent(&self) -> bool {
        (1.0 + self.ce_over_s()).abs() <= 1e-12
    }

    fn bound_level(&self, n: u32) -> Result<MorseLevel> {
        let level = self.energy(n)?;
        if !level.bound {
            return Err(Error::NotBound { n, nu: level.nu });
        }
        Ok(level)
    }

    /// z^ν e^{−z/2}, evaluated as a single exponential.
    fn envelope(z: Complex64, nu: f64) -> Complex64 {
        (z.ln() * nu - z * 0.5).exp()
    }

    /// φ_n^u = z^{ν_n} e^{−z/2} L_n^{2ν_n}(z) on the principal branch.
    pub fn upper(&self, r: f64, n: u32) -> Result<Complex64> {
        let level = self.bound_level(n)?;
        let z = self.z(r);
        let poly = laguerre(n as usize, 2.0 * level.nu, z)?;
        Ok(Self::envelope(z, level.nu) * poly)
    }

    /// φ_n^l = −z^ν e^{−z/2} [(Sm + ν + n) L_n^{2ν} − (2ν + n) L_{n−1}^{2ν}] / (mC + E_r).
    ///
    /// The minus sign on the L_{n−1} term is what z d/dz L_n^α = n L_n^α − (n + α) L_{n−1}^α
    /// gives when the first-order relation (−Sm − z/2 − z d/dz)φᵘ / (mC + E_r) is expanded.
    pub fn lower(&self, r: f64, n: u32) -> Result<Complex64> {
        let level = self.bound_level(n)?;
        let m = self.params.mass();
        let denom = m * self.transform.c() + level.energy;
        if denom.abs() < DENOMINATOR_FLOOR {
            return Err(Error::SingularDenominator {
                what: "mC + E_r",
                value: denom,
            });
        }
        let z = self.z(r);
        let nu = level.nu;
        let nf = n as f64;
        let (ln, ln1) = if n == 0 {
            (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
        } else {
            laguerre_pair(n as usize, 2.0 * nu, z)?
        };
        let bracket = ln * (self.transform.s() * m + nu + nf) - ln1 * (2.0 * nu + nf);
        Ok(-Self::envelope(z, nu) * bracket / denom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: f64, e: f64) -> PhysicalParams {
        PhysicalParams::morse(m, e).unwrap()
    }

    #[test]
    fn ground_state_reduces_to_mass_over_root() {
        let level = morse_energy(0, &params(1.0, -1.0)).unwrap();
        assert!((level.energy - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn level_two_of_heavy_particle() {
        let level = morse_energy(2, &params(10.0, -1.0)).unwrap();
        assert!((level.energy - 8.0).abs() < 1e-14);
        assert!((level.nu - 6.0).abs() < 1e-14);
        assert!(level.bound);
    }

    #[test]
    fn out_of_range_level() {
        assert!(matches!(
            morse_energy(15, &params(10.0, -1.0)),
            Err(Error::LevelOutOfRange { n: 15, .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(morse_energy_oracle(0, &params(1.0, 0.0)).unwrap(), 1.0);
        assert!((morse_energy_oracle(2, &params(10.0, -1.0)).unwrap() - 8.0).abs() < 1e-14);
        assert!(matches!(
            morse_energy_oracle(15, &params(10.0, -1.0)),
            Err(Error::NoRealRoot(_))
        ));
    }

    #[test]
    fn spectrum_of_heavy_particle() {
        let s = morse_spectrum(&params(10.0, -1.0));
        assert!(!s.empty);
        let ns: Vec<u32> = s.levels.iter().map(|l| l.n).collect();
        assert_eq!(ns, (0..10).collect::<Vec<_>>());
        let top = s.levels[9];
        assert!((top.energy - (9.0 + 119f64.sqrt()) / 2.0).abs() < 1e-14);
        assert!((top.nu - 0.954_4).abs() < 1e-4);
        let edge = morse_energy(10, &params(10.0, -1.0)).unwrap();
        assert_eq!(edge.energy, 10.0);
        assert!(!edge.bound);
    }

    #[test]
    fn zero_charge_has_no_bound_levels() {
        let s = morse_spectrum(&params(1.0, 0.0));
        assert!(s.empty);
        assert!(s.levels.is_empty());
        let only = morse_energy(0, &params(1.0, 0.0)).unwrap();
        assert_eq!((only.energy, only.nu), (1.0, 0.0));
    }

    #[test]
    fn model_rejections() {
        let p = params(10.0, -1.0);
        let pot = MorsePotential::new(1.0, 0.3).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let sym = TransformParams::new(h, h).unwrap();
        assert!(matches!(
            MorseModel::new(p, sym, pot),
            Err(Error::SingularMixing(_))
        ));
        // B on the negative real axis.
        let t = TransformParams::new(0.8, 0.6).unwrap();
        let on_cut = MorsePotential::new(1.0, 0.0).unwrap();
        assert!(matches!(
            MorseModel::new(p, t, on_cut),
            Err(Error::Domain(_))
        ));
        assert!(MorsePotential::new(0.0, 0.0).is_err());
    }

    fn unit_coupling_model(eta: f64) -> MorseModel {
        // e = -1 with C/S = -1 gives Ce/S = 1.
        let t = TransformParams::from_angle(3.0 * PI / 8.0).unwrap();
        MorseModel::new(
            params(10.0, -1.0),
            t,
            MorsePotential::new(1.0, eta).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn effective_potential_hand_value() {
        let model = unit_coupling_model(0.0);
        assert!((model.ce_over_s() - 1.0).abs() < 1e-14);
        let v = model.effective_potential(0.0, 1.0);
        assert!((v - Complex64::new(-2.0, 0.0)).norm() < 1e-13);
        assert!(model.effective_potential(60.0, 1.0).norm() < 1e-20);
        assert_eq!(model.effective_potential(0.7, 3.0).im, 0.0);
    }

    #[test]
    fn correspondence_reconstructs_effective_potential() {
        let model = unit_coupling_model(0.4);
        for level in model.spectrum().levels {
            let corr = model.correspondence(level.energy);
            assert!((corr.d + model.params().charge() * level.energy).abs() < 1e-15);
            assert!((corr.schrodinger_level(level.n) - corr.e_nonrel).abs() < 1e-11);
            for &x in &[-3.0, -0.5, 0.0, 1.5, 4.0] {
                let a = corr.schrodinger_potential(x);
                let b = model.effective_potential(x, level.energy);
                assert!((a - b).norm() < 1e-12 * (1.0 + a.norm()));
            }
        }
    }

    #[test]
    fn upper_at_origin_hand_value() {
        let model = unit_coupling_model(0.0);
        let phi = model.upper(0.0, 2).unwrap();
        // z = 2, nu = 6, L_2^{12}(2) = 91 - 28 + 2 = 65.
        let expected = 64.0 * 65.0 * (-1.0f64).exp();
        assert!((phi.re - expected).abs() < 1e-10 * expected);
        assert!(phi.im.abs() < 1e-10 * expected);
        assert!((expected - 1_530.378_5).abs() < 1e-3);
    }

    #[test]
    fn ground_state_upper_is_pure_envelope() {
        let model = unit_coupling_model(0.3);
        let nu = model.energy(0).unwrap().nu;
        for &r in &[-2.0, 0.0, 3.0] {
            let z = model.z(r);
            let want = z.powf(nu) * (-z / 2.0).exp();
            assert!((model.upper(r, 0).unwrap() - want).norm() < 1e-12 * want.norm());
        }
    }

    #[test]
    fn upper_decays_at_large_r() {
        let model = unit_coupling_model(0.7);
        for level in model.spectrum().levels {
            let near = model.upper(2.0, level.n).unwrap().norm();
            let far = model.upper(40.0, level.n).unwrap().norm();
            assert!(far < 1e-10 * near.max(1.0), "n = {}", level.n);
        }
    }

    #[test]
    fn unbound_level_rejected() {
        let model = unit_coupling_model(0.3);
        assert!(matches!(
            model.upper(0.0, 10),
            Err(Error::NotBound { n: 10, .. })
        ));
        assert!(matches!(model.lower(0.0, 12), Err(Error::NotBound { .. })));
        assert!(matches!(
            model.upper(0.0, 15),
            Err(Error::LevelOutOfRange { .. })
        ));
    }

    #[test]
    fn lower_ground_state_vanishes_when_bracket_coefficient_does() {
        // S = -1/sqrt(2) makes S m + nu_0 = 0 for m = 10, e = -1.
        let t = TransformParams::from_angle(-PI / 8.0).unwrap();
        let model = MorseModel::new(
            params(10.0, -1.0),
            t,
            MorsePotential::new(1.0, 0.2).unwrap(),
        )
        .unwrap();
        let level = model.energy(0).unwrap();
        assert!((t.s() * 10.0 + level.nu).abs() < 1e-13);
        for &r in &[-1.0, 0.5, 2.0] {
            let lower = model.lower(r, 0).unwrap();
            let upper = model.upper(r, 0).unwrap();
            assert!(lower.norm() < 1e-13 * upper.norm());
        }
    }

    #[test]
    fn mismatch_vanishes_only_for_unit_negative_ratio() {
        let consistent = MorseModel::new(
            params(10.0, -1.0),
            TransformParams::from_angle(PI / 8.0).unwrap(),
            MorsePotential::new(-1.0, 0.3).unwrap(),
        )
        .unwrap();
        assert!(consistent.reduction_consistent());
        let inconsistent = unit_coupling_model(0.3);
        assert!(!inconsistent.reduction_consistent());
        for level in consistent.spectrum().levels {
            assert!(consistent.linear_coefficient_mismatch(level.energy).norm() < 1e-12);
            for &x in &[-2.0, 0.0, 3.0] {
                let a = consistent.effective_potential(x, level.energy);
                let b = consistent.reduced_effective_potential(x, level.energy);
                assert!((a - b).norm() < 1e-11 * (1.0 + a.norm()));
            }
        }
        let e8 = 8.0;
        assert!(inconsistent.linear_coefficient_mismatch(e8).norm() > 1.0);
    }
}
