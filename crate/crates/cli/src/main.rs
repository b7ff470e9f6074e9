mod args;
mod config;
mod error;
mod output;
mod scan;
mod settings;
mod spectrum;
mod verify;
mod wavefunction;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format};
use config::ConfigFile;
use error::CliResult;
use settings::{Defaults, Physics};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    let cfg = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Spectrum {
            model,
            physics,
            n,
            j,
            labeling,
        } => {
            let physics = Physics::resolve(*model, physics, &cfg, Defaults::Required)?;
            let n = cfg.pick(n.clone(), "n")?;
            let req = spectrum::SpectrumRequest {
                n: n.as_deref(),
                j: cfg.pick(*j, "j")?,
                labeling: *labeling,
            };
            let rendered = spectrum::run(&physics, &req)?;
            output::emit(&rendered, cli.output.unwrap_or(Format::Json), out)
        }
        Command::Wavefunction {
            model,
            physics,
            grid,
            n,
            lower,
        } => {
            let physics = Physics::resolve(*model, physics, &cfg, Defaults::Required)?;
            let grid = settings::grid(*model, grid, &cfg)?;
            let rendered = wavefunction::run(&physics, &grid, cfg.pick(*n, "n")?, *lower)?;
            output::emit(&rendered, cli.output.unwrap_or(Format::Csv), out)
        }
        Command::Verify {
            model,
            physics,
            grid,
            kappa_override,
        } => {
            let physics = Physics::resolve(*model, physics, &cfg, Defaults::Demo)?;
            let grid = settings::grid(*model, grid, &cfg)?;
            let (rendered, verdict) = verify::run(
                &physics,
                &grid,
                cfg.pick(*kappa_override, "kappa-override")?,
            )?;
            output::emit(&rendered, cli.output.unwrap_or(Format::Json), out)?;
            verdict
        }
        Command::Scan {
            model,
            physics,
            axes,
            n,
            j,
            labeling,
            shooting,
        } => {
            let scanned = |names: &[&str]| {
                axes.iter().any(|a| {
                    let name = a.split_once('=').map_or("", |(n, _)| n.trim());
                    names.contains(&name)
                })
            };
            // A scanned mass or Z only waives its own requirement.
            let mut physics_args = physics.clone();
            if scanned(&["m"])
                && physics_args.mass.is_none()
                && cfg.pick(None::<f64>, "mass")?.is_none()
            {
                physics_args.mass = Some(1.0);
            }
            if scanned(&["Z", "z"])
                && physics_args.z.is_none()
                && cfg.pick(None::<f64>, "z")?.is_none()
            {
                physics_args.z = Some(0.0);
            }
            let physics = Physics::resolve(*model, &physics_args, &cfg, Defaults::Required)?;
            let n = cfg.pick(n.clone(), "n")?;
            let req = scan::ScanRequest {
                axes,
                n: n.as_deref(),
                j: cfg.pick(*j, "j")?,
                labeling: *labeling,
                shooting: *shooting,
            };
            let rendered = scan::run(&physics, &req)?;
            output::emit(&rendered, cli.output.unwrap_or(Format::Csv), out)
        }
    }
}
