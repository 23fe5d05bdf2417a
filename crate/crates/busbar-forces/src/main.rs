//! `busbar-forces`: per-unit-length electrodynamic forces between massive
//! rectangular conductors, from the command line.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use busbar_forces::cli::config::{
    CurrentsConfig, GeometryConfig, MethodConfig, MethodName, Mode, OutputConfig, RunConfig,
    ScalarOrRange,
};
use busbar_forces::cli::{
    emit, example_config, execute_plan, load_config, CliError, OutputFormat,
};

#[derive(Parser)]
#[command(
    name = "busbar-forces",
    version,
    about = "Electrodynamic forces between massive rectangular busbar conductors (N/m)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a scalar force from flags.
    Compute {
        /// Cross-section half-width a (m); the conductor is 2a wide.
        #[arg(long)]
        a: f64,
        /// Cross-section half-height b (m); the conductor is 2b tall.
        #[arg(long)]
        b: f64,
        /// Horizontal center-to-center distance d (m); requires d > 2a.
        #[arg(long)]
        d: f64,
        /// Vertical center-to-center distance h (m); requires h > 2b.
        /// Omitted: adjacent layout (fx only).
        #[arg(long)]
        h: Option<f64>,
        /// Current in conductor 1 (A).
        #[arg(long)]
        i1: f64,
        /// Current in conductor 2 (A).
        #[arg(long)]
        i2: f64,
        /// Evaluation method: closed-form, reduced-quadrature, direct-4d,
        /// or filament.
        #[arg(long, default_value = "closed-form")]
        method: String,
        /// Gauss-Legendre points per panel per dimension.
        #[arg(long)]
        order: Option<usize>,
        /// Filament grid subdivisions per direction.
        #[arg(long)]
        filament_n: Option<usize>,
        /// Relative tolerance for adaptive quadrature.
        #[arg(long)]
        rel_tol: Option<f64>,
        /// Output format: csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a parametric sweep described by a JSON config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
    /// Evaluate a force time series described by a JSON config file.
    Timeseries {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run one of the built-in reference scenarios (1, 2, or 3).
    Example {
        number: u8,
        /// Output file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Output format: csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Check a JSON config file (schema and domain constraints) without
    /// computing anything.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprint!("{e}");
            return 1;
        }
    };
    match run(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Compute {
            a,
            b,
            d,
            h,
            i1,
            i2,
            method,
            order,
            filament_n,
            rel_tol,
            format,
            output,
        } => {
            let config = RunConfig {
                mode: if h.is_some() { Mode::NonAdjacent } else { Mode::Adjacent },
                geometry: GeometryConfig {
                    a,
                    b,
                    d: ScalarOrRange::Scalar(d),
                    h: h.map(ScalarOrRange::Scalar),
                },
                currents: Some(CurrentsConfig { i1, i2 }),
                waveform: None,
                method: Some(MethodConfig {
                    name: parse_method(&method)?,
                    order,
                    filament_n,
                    rel_tol,
                }),
                output: Some(OutputConfig {
                    format: parse_format(&format)?,
                    path: output.map(|p| p.display().to_string()),
                }),
            };
            busbar_forces::cli::run_config(&config)
        }
        Command::Sweep { config } => run_file(&config, Mode::Sweep),
        Command::Timeseries { config } => run_file(&config, Mode::Timeseries),
        Command::Example {
            number,
            output,
            format,
        } => {
            let mut config = example_config(number)?;
            config.output = Some(OutputConfig {
                format: parse_format(&format)?,
                path: output.map(|p| p.display().to_string()),
            });
            busbar_forces::cli::run_config(&config)
        }
        Command::Validate { config } => {
            let parsed = load_config(&config)?;
            parsed.plan()?;
            println!("configuration OK: {}", config.display());
            Ok(())
        }
    }
}

fn run_file(path: &Path, expected_mode: Mode) -> Result<(), CliError> {
    let config = load_config(path)?;
    if config.mode != expected_mode {
        return Err(CliError::Lib(busbar_forces::Error::Config(format!(
            "config mode is '{}' but this subcommand expects '{}'",
            config.mode.name(),
            expected_mode.name()
        ))));
    }
    let plan = config.plan()?;
    let table = execute_plan(&plan)?;
    emit(&table, plan.format, plan.path.as_deref())?;
    Ok(())
}

fn parse_method(name: &str) -> Result<MethodName, CliError> {
    match name {
        "closed-form" => Ok(MethodName::ClosedForm),
        "reduced-quadrature" => Ok(MethodName::ReducedQuadrature),
        "direct-4d" => Ok(MethodName::Direct4d),
        "filament" => Ok(MethodName::Filament),
        other => Err(CliError::Lib(busbar_forces::Error::Config(format!(
            "unknown method '{other}'; expected closed-form, reduced-quadrature, direct-4d, or filament"
        )))),
    }
}

fn parse_format(name: &str) -> Result<OutputFormat, CliError> {
    match name {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(CliError::Lib(busbar_forces::Error::Config(format!(
            "unknown output format '{other}'; expected csv or json"
        )))),
    }
}
