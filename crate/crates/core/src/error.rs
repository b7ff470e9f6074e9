use thiserror::Error;

/// Errors raised by the spectrum, eigenfunction and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("transform is not unitary: a^2 + b^2 = {norm} (tolerance 1e-12)")]
    NotUnitary { norm: f64 },

    #[error("singular mixing: {0}")]
    SingularMixing(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("Laguerre degree {0} exceeds the supported maximum of 64")]
    DegreeTooLarge(usize),

    #[error("level n = {n} is out of range: (1 + e^2) m^2 - n^2 = {discriminant} < 0")]
    LevelOutOfRange { n: u32, discriminant: f64 },

    #[error("quadratic has no real root: discriminant {0} < 0")]
    NoRealRoot(f64),

    #[error("level n = {n} is not bound: nu_n = {nu} is not positive")]
    NotBound { n: u32, nu: f64 },

    #[error("singular denominator {what} = {value:e}")]
    SingularDenominator { what: &'static str, value: f64 },

    #[error("reality violation: q^2 = {q_sq} >= N_eff^2 = {n_eff_sq}")]
    RealityViolation { q_sq: f64, n_eff_sq: f64 },

    #[error("coupling q vanishes, so the scaled Coulomb variable is identically zero")]
    DegenerateCoupling,

    #[error("grid has {points} points, at least {needed} are required")]
    GridTooSmall { points: usize, needed: usize },

    #[error("profiles are sampled on different grids")]
    GridMismatch,

    #[error("evaluation failed at node {index}: {source}")]
    AtNode { index: usize, source: Box<Error> },

    #[error("shooting did not converge after {iterations} iterations (defect {defect:e}, last E_r = {last})")]
    NoConvergence {
        iterations: usize,
        defect: f64,
        last: num_complex::Complex64,
    },

    #[error("integration overflowed near x = {x} even after rescaling")]
    BlowUp { x: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
