use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Spectra, eigenfunctions and numerical checks for a Dirac particle in complex
/// Morse and Coulomb potentials.
///
/// Parameters can also come from a key=value file (--config); flags given on the
/// command line take precedence. Keys are the long flag names without dashes.
#[derive(Debug, Parser)]
#[command(name = "complex-dirac", version)]
pub struct Cli {
    /// Output format. Defaults to JSON for spectrum and verify, CSV for wavefunction and scan.
    #[arg(long, value_enum, global = true)]
    pub output: Option<Format>,

    /// Flat key=value configuration file; `#` starts a comment.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Write results to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Suppress notes on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Morse,
    Coulomb,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Morse => "morse",
            ModelKind::Coulomb => "coulomb",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LabelingArg {
    /// n and j, N = n - j - 1/2 + sqrt((j + 1/2)^2 + Z^2 alpha^2).
    Principal,
    /// n is the radial quantum number, N = n + gamma + 1.
    Radial,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form energy levels.
    Spectrum {
        model: ModelKind,
        #[command(flatten)]
        physics: PhysicsArgs,
        /// Level or inclusive range, e.g. `2` or `1..3`. Morse defaults to every bound level.
        #[arg(long)]
        n: Option<String>,
        /// Total angular momentum j (Coulomb, principal labeling). Default 0.5.
        #[arg(long)]
        j: Option<f64>,
        /// Coulomb level labeling. Default principal.
        #[arg(long, value_enum)]
        labeling: Option<LabelingArg>,
    },
    /// Samples of the upper and lower radial components of one level as CSV.
    Wavefunction {
        model: ModelKind,
        #[command(flatten)]
        physics: PhysicsArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Level index; the radial quantum number n_r for Coulomb.
        #[arg(long)]
        n: Option<u32>,
        /// Coulomb only: fill the lower columns from the first-order relation.
        #[arg(long)]
        lower: bool,
    },
    /// Residual, shooting and first-order closure checks with pass/fail verdicts.
    Verify {
        model: ModelKind,
        #[command(flatten)]
        physics: PhysicsArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Use this kappa in the checked equations instead of the one that built
        /// the solution (sensitivity test).
        #[arg(long, allow_hyphen_values = true)]
        kappa_override: Option<i32>,
    },
    /// Level energies over a grid of one or two parameters.
    Scan {
        model: ModelKind,
        #[command(flatten)]
        physics: PhysicsArgs,
        /// Axis NAME=START..END:STEP with NAME one of Z, e, m, a, n, eta. Give once or twice.
        #[arg(long = "axis", required = true, allow_hyphen_values = true)]
        axes: Vec<String>,
        /// Levels reported per point when n is not an axis. Default 0..4 (Morse), 1..3 (Coulomb).
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        j: Option<f64>,
        #[arg(long, value_enum)]
        labeling: Option<LabelingArg>,
        /// Morse only: report shooting eigenvalues seeded from the closed form.
        #[arg(long)]
        shooting: bool,
    },
}

/// Physical and mixing parameters. Defaults are listed per model in the README;
/// alpha defaults to 1/137.036.
#[derive(Debug, Clone, Default, Args)]
pub struct PhysicsArgs {
    #[arg(long)]
    pub mass: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub charge: Option<f64>,
    /// Fine-structure constant (default 1/137.036).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Atomic number Z (Coulomb).
    #[arg(long)]
    pub z: Option<f64>,
    /// Real part of the Morse strength.
    #[arg(long, allow_hyphen_values = true)]
    pub zeta: Option<f64>,
    /// Imaginary part of the Morse strength.
    #[arg(long, allow_hyphen_values = true)]
    pub eta: Option<f64>,
    /// Mixing parameter a (a^2 + b^2 = 1).
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Mixing parameter b.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<i32>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub x_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    /// Downward shift of the Coulomb contour r = x - i theta (default 1).
    #[arg(long)]
    pub theta: Option<f64>,
}
