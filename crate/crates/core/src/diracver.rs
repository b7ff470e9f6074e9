//! Closing the loop: rebuild (u₁, u₂) from the upper component and check the
//! first-order radial Dirac system
//!
//! ```text
//! (m + eV − E_r) u₁ = (∂ − κ/r − eA) u₂
//! (eV − m − E_r) u₂ = −(∂ + κ/r + eA) u₁
//! ```
//!
//! together with the mixed pairs the reductions start from. All derivatives are
//! finite differences along the grid; on a contour r = x − iθ, d/dr = d/dx.

use num_complex::Complex64;

use crate::coulomb::CoulombModel;
use crate::error::{Error, Result};
use crate::grid::{ComplexProfile, RadialGrid};
use crate::morse::MorseModel;
use crate::numerics::fd::first_derivative;
use crate::numerics::Stencil;
use crate::params::PhysicalParams;
use crate::transform::TransformParams;

const DENOMINATOR_FLOOR: f64 = 1e-14;

/// Original-basis radial pair on one grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorPair {
    u1: ComplexProfile,
    u2: ComplexProfile,
}

impl SpinorPair {
    pub fn new(u1: ComplexProfile, u2: ComplexProfile) -> Result<Self> {
        u1.same_grid(&u2)?;
        Ok(Self { u1, u2 })
    }

    pub fn u1(&self) -> &ComplexProfile {
        &self.u1
    }

    pub fn u2(&self) -> &ComplexProfile {
        &self.u2
    }

    pub fn grid(&self) -> &RadialGrid {
        self.u1.grid()
    }
}

/// Relative residuals of a coupled first-order pair. Each is the largest interior
/// residual divided by the largest derivative appearing in that equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstOrderReport {
    pub res_eq1: f64,
    pub res_eq2: f64,
    /// Both components vanish identically.
    pub trivial: bool,
}

impl FirstOrderReport {
    pub fn max(&self) -> f64 {
        self.res_eq1.max(self.res_eq2)
    }
}

/// How the lower component follows from the upper one.
#[derive(Debug, Clone, Copy)]
pub enum LowerContext<'a> {
    /// φˡ = (CeV/S − Sm + ∂)φᵘ / (mC + E_r) on the real Morse line.
    Morse(&'a MorseModel),
    /// φˡ = (−g/r − iSE_r + ∂)φᵘ / (m + E_rC) with g = (S² − C²)Zα/S.
    Coulomb(&'a CoulombModel),
}

/// Which global mixing connects (φᵘ, φˡ) to (u₁, u₂).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    RealMix,
    ComplexMix,
}

pub fn lower_from_upper(
    phi_u: &ComplexProfile,
    context: LowerContext<'_>,
    energy: f64,
    stencil: Stencil,
) -> Result<ComplexProfile> {
    let grid = *phi_u.grid();
    check_size(&grid, stencil)?;
    let values = phi_u.values();
    let d = first_derivative(values, grid.step(), stencil);
    let out = match context {
        LowerContext::Morse(model) => {
            if grid.theta() != 0.0 {
                return Err(Error::InvalidParameter {
                    name: "grid",
                    reason: "the Morse relation is evaluated on the real line".into(),
                });
            }
            let (m, t) = (model.params().mass(), model.transform());
            let denom = m * t.c() + energy;
            if denom.abs() < DENOMINATOR_FLOOR {
                return Err(Error::SingularDenominator {
                    what: "mC + E_r",
                    value: denom,
                });
            }
            let e_over_s = model.params().charge() / t.s();
            (0..grid.len())
                .map(|k| {
                    let cev_s = model.potential().value(grid.x(k)) * (t.c() * e_over_s);
                    ((cev_s - t.s() * m) * values[k] + d[k]) / denom
                })
                .collect()
        }
        LowerContext::Coulomb(model) => {
            let (m, t) = (model.params().mass(), model.transform());
            let denom = m + energy * t.c();
            if denom.abs() < DENOMINATOR_FLOOR {
                return Err(Error::SingularDenominator {
                    what: "m + E_r C",
                    value: denom,
                });
            }
            let g = model.first_order_coupling();
            let ise = Complex64::new(0.0, t.s() * energy);
            grid.nodes()
                .enumerate()
                .map(|(k, r)| ((-g / r - ise) * values[k] + d[k]) / denom)
                .collect()
        }
    };
    ComplexProfile::new(grid, out)
}

/// Applies the chosen mixing node by node.
pub fn reconstruct(
    phi_u: &ComplexProfile,
    phi_l: &ComplexProfile,
    t: &TransformParams,
    flavor: Flavor,
) -> Result<SpinorPair> {
    phi_u.same_grid(phi_l)?;
    let (u1, u2): (Vec<_>, Vec<_>) = phi_u
        .values()
        .iter()
        .zip(phi_l.values())
        .map(|(&pu, &pl)| match flavor {
            Flavor::RealMix => t.mix_real(pu, pl),
            Flavor::ComplexMix => t.mix_complex(pu, pl),
        })
        .unzip();
    let grid = *phi_u.grid();
    SpinorPair::new(
        ComplexProfile::new(grid, u1)?,
        ComplexProfile::new(grid, u2)?,
    )
}

/// Residuals of the first-order radial system for the given eV and eA profiles.
pub fn verify_first_order(
    sp: &SpinorPair,
    ev: &ComplexProfile,
    ea: &ComplexProfile,
    kappa: i32,
    p: &PhysicalParams,
    energy: f64,
    stencil: Stencil,
) -> Result<FirstOrderReport> {
    sp.u1.same_grid(ev)?;
    sp.u1.same_grid(ea)?;
    let grid = *sp.grid();
    check_size(&grid, stencil)?;
    let (u1, u2) = (sp.u1.values(), sp.u2.values());
    let d1 = first_derivative(u1, grid.step(), stencil);
    let d2 = first_derivative(u2, grid.step(), stencil);
    let m = p.mass();
    let k = f64::from(kappa);
    let nodes: Vec<Complex64> = grid.nodes().collect();
    Ok(assemble(&grid, stencil, &d2, &d1, |i| {
        let w = k / nodes[i] + ea.values()[i];
        let v = ev.values()[i];
        (
            (v + m - energy) * u1[i] - (d2[i] - w * u2[i]),
            (v - m - energy) * u2[i] + (d1[i] + w * u1[i]),
        )
    }))
}

/// Residuals of the real-mixed pair
///
/// ```text
/// (2eV + Cm − E_r)φᵘ + (CeV/S − Sm − ∂)φˡ = 0
/// (CeV/S − Sm + ∂)φᵘ − (Cm + E_r)φˡ = 0
/// ```
///
/// which is the first-order system rewritten under u₁ = aφᵘ − bφˡ, u₂ = bφᵘ + aφˡ
/// with the gauge eV = S(eA + κ/r).
pub fn verify_real_mixed(
    phi_u: &ComplexProfile,
    phi_l: &ComplexProfile,
    ev: &ComplexProfile,
    t: &TransformParams,
    p: &PhysicalParams,
    energy: f64,
    stencil: Stencil,
) -> Result<FirstOrderReport> {
    phi_u.same_grid(phi_l)?;
    phi_u.same_grid(ev)?;
    let grid = *phi_u.grid();
    check_size(&grid, stencil)?;
    let (pu, pl) = (phi_u.values(), phi_l.values());
    let du = first_derivative(pu, grid.step(), stencil);
    let dl = first_derivative(pl, grid.step(), stencil);
    let (m, s, c) = (p.mass(), t.s(), t.c());
    Ok(assemble(&grid, stencil, &dl, &du, |i| {
        let v = ev.values()[i];
        let off = v * (c / s) - s * m;
        (
            (v * 2.0 + c * m - energy) * pu[i] + off * pl[i] - dl[i],
            off * pu[i] + du[i] - (c * m + energy) * pl[i],
        )
    }))
}

/// Residuals of the complex-mixed Coulomb pair
///
/// ```text
/// (m − E_rC)φᵘ + (−g/r − iSE_r − ∂)φˡ = 0
/// (−g/r − iSE_r + ∂)φᵘ − (m + E_rC)φˡ = 0
/// ```
///
/// with g = (S² − C²)Zα/S. Eliminating φˡ yields the upper equation with centrifugal
/// term g(g − 1)/r², so it closes on the Coulomb levels only when g(g − 1) = γ(γ + 1).
pub fn verify_coulomb_mixed(
    phi_u: &ComplexProfile,
    phi_l: &ComplexProfile,
    model: &CoulombModel,
    energy: f64,
    stencil: Stencil,
) -> Result<FirstOrderReport> {
    phi_u.same_grid(phi_l)?;
    let grid = *phi_u.grid();
    check_size(&grid, stencil)?;
    let (pu, pl) = (phi_u.values(), phi_l.values());
    let du = first_derivative(pu, grid.step(), stencil);
    let dl = first_derivative(pl, grid.step(), stencil);
    let (m, t) = (model.params().mass(), model.transform());
    let g = model.first_order_coupling();
    let ise = Complex64::new(0.0, t.s() * energy);
    let nodes: Vec<Complex64> = grid.nodes().collect();
    Ok(assemble(&grid, stencil, &dl, &du, |i| {
        let off = -g / nodes[i] - ise;
        (
            (m - energy * t.c()) * pu[i] + off * pl[i] - dl[i],
            off * pu[i] + du[i] - (m + energy * t.c()) * pl[i],
        )
    }))
}

fn check_size(grid: &RadialGrid, stencil: Stencil) -> Result<()> {
    let needed = stencil.points().max(5);
    if grid.len() < needed {
        return Err(Error::GridTooSmall {
            points: grid.len(),
            needed,
        });
    }
    Ok(())
}

/// Maximum interior residuals, each scaled by the derivative in its equation.
fn assemble(
    grid: &RadialGrid,
    stencil: Stencil,
    deriv_eq1: &[Complex64],
    deriv_eq2: &[Complex64],
    residuals: impl Fn(usize) -> (Complex64, Complex64),
) -> FirstOrderReport {
    let half = stencil.half_width();
    let interior = half..grid.len() - half;
    let (mut r1, mut r2, mut s1, mut s2) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for i in interior {
        let (a, b) = residuals(i);
        r1 = r1.max(a.norm());
        r2 = r2.max(b.norm());
        s1 = s1.max(deriv_eq1[i].norm());
        s2 = s2.max(deriv_eq2[i].norm());
    }
    let trivial = s1 == 0.0 && s2 == 0.0 && r1 == 0.0 && r2 == 0.0;
    let rel = |r: f64, s: f64| if r == 0.0 { 0.0 } else { r / s };
    FirstOrderReport {
        res_eq1: rel(r1, s1),
        res_eq2: rel(r2, s2),
        trivial,
    }
}
