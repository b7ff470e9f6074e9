//! Physical constants of a run and the spin-orbit quantum numbers.

use crate::error::{Error, Result};

/// Fine-structure constant used when none is supplied.
pub const DEFAULT_ALPHA: f64 = 1.0 / 137.036;

/// Mass, charge, fine-structure constant and atomic number, in units with ħ = c = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    mass: f64,
    charge: f64,
    alpha: f64,
    atomic_number: f64,
}

impl PhysicalParams {
    /// Validates `m > 0`, `alpha > 0`, `Z >= 0`; the charge is signed (an electron has `e < 0`).
    pub fn new(mass: f64, charge: f64, alpha: f64, atomic_number: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(invalid(
                "mass",
                format!("must be finite and > 0, got {mass}"),
            ));
        }
        if !charge.is_finite() {
            return Err(invalid("charge", format!("must be finite, got {charge}")));
        }
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(invalid(
                "alpha",
                format!("must be finite and > 0, got {alpha}"),
            ));
        }
        if !(atomic_number.is_finite() && atomic_number >= 0.0) {
            return Err(invalid(
                "Z",
                format!("must be finite and >= 0, got {atomic_number}"),
            ));
        }
        Ok(Self {
            mass,
            charge,
            alpha,
            atomic_number,
        })
    }

    /// Parameters for the Morse problem, where α and Z play no role.
    pub fn morse(mass: f64, charge: f64) -> Result<Self> {
        Self::new(mass, charge, DEFAULT_ALPHA, 0.0)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn charge(&self) -> f64 {
        self.charge
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn atomic_number(&self) -> f64 {
        self.atomic_number
    }

    /// The product Zα.
    pub fn z_alpha(&self) -> f64 {
        self.atomic_number * self.alpha
    }
}

fn invalid(name: &'static str, reason: String) -> Error {
    Error::InvalidParameter { name, reason }
}

/// Spin-orbit number κ together with a principal index n.
///
/// κ = −(j + ½) when j = l + ½ and κ = +(j + ½) when j = l − ½, so |κ| = j + ½.
/// The radial index follows the principal-labeling convention n_r = n − (j + ½).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumNumbers {
    kappa: i32,
    principal: u32,
}

impl QuantumNumbers {
    pub fn new(kappa: i32, principal: u32) -> Result<Self> {
        if kappa == 0 {
            return Err(invalid("kappa", "must be nonzero".into()));
        }
        if principal < kappa.unsigned_abs() {
            return Err(invalid(
                "n",
                format!(
                    "principal index {principal} is below j + 1/2 = {}",
                    kappa.unsigned_abs()
                ),
            ));
        }
        Ok(Self { kappa, principal })
    }

    /// Builds κ from orbital `l` and `twice_j` = 2j (which must be 2l ± 1).
    pub fn from_l_j(l: u32, twice_j: u32, principal: u32) -> Result<Self> {
        let kappa = kappa_from_l_j(l, twice_j)?;
        Self::new(kappa, principal)
    }

    pub fn kappa(&self) -> i32 {
        self.kappa
    }

    pub fn principal(&self) -> u32 {
        self.principal
    }

    pub fn j(&self) -> f64 {
        self.kappa.unsigned_abs() as f64 - 0.5
    }

    pub fn twice_j(&self) -> u32 {
        2 * self.kappa.unsigned_abs() - 1
    }

    pub fn l(&self) -> u32 {
        orbital_from_kappa(self.kappa)
    }

    pub fn radial(&self) -> u32 {
        self.principal - self.kappa.unsigned_abs()
    }
}

/// κ for a given (l, j); `twice_j` must equal 2l + 1 or 2l − 1.
pub fn kappa_from_l_j(l: u32, twice_j: u32) -> Result<i32> {
    if twice_j == 2 * l + 1 {
        Ok(-(l as i32 + 1))
    } else if l > 0 && twice_j == 2 * l - 1 {
        Ok(l as i32)
    } else {
        Err(invalid(
            "j",
            format!("2j = {twice_j} is not 2l +/- 1 for l = {l}"),
        ))
    }
}

/// Orbital angular momentum belonging to κ.
pub fn orbital_from_kappa(kappa: i32) -> u32 {
    if kappa < 0 {
        (-kappa - 1) as u32
    } else {
        kappa as u32
    }
}
