//! Bound-state spectra and radial spinors of a Dirac particle in complex
//! (non-Hermitian) Morse and Coulomb potentials.
//!
//! The radial Dirac pair (u₁, u₂) is rotated by a global unitary mixing into upper and
//! lower components (φᵘ, φˡ). With the gauge field fixed so that the reduced equation
//! for φᵘ is Schrödinger-like, each problem maps onto an exactly solvable
//! non-relativistic one, which yields closed-form real spectra. The [`numerics`] and
//! [`diracver`] modules check these results independently by finite-difference
//! residuals, shooting, and reconstruction of the original first-order system.

pub mod coulomb;
pub mod diracver;
pub mod error;
pub mod gauge;
pub mod grid;
pub mod morse;
pub mod numerics;
pub mod params;
pub mod specfun;
pub mod transform;

pub use error::{Error, Result};
pub use grid::{ComplexProfile, RadialGrid};
pub use params::{PhysicalParams, QuantumNumbers, DEFAULT_ALPHA};
pub use transform::TransformParams;

pub use num_complex::Complex64;
