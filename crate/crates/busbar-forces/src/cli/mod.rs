//! Command-line front end: JSON scenario configs in, CSV/JSON tables out,
//! including canned reproductions of the three reference scenarios.
//!
//! Exit codes: 0 success, 1 domain/config error, 2 numeric convergence
//! failure, 3 I/O error.

pub mod config;
pub mod output;

use std::path::Path;

use crate::forces::force_series;
use crate::kernels::Component;
use crate::model::Layout;
use crate::sweep::run_sweep;
use crate::Error;

pub use config::{example_config, RunAction, RunConfig, RunPlan};
pub use output::{emit, OutputFormat, OutputTable, TableMetadata};

/// Library or I/O failure, with the process exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::Convergence { .. }) => 2,
            CliError::Lib(_) => 1,
            CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "I/O error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Execute a validated plan into an output table.
pub fn execute_plan(plan: &RunPlan) -> Result<OutputTable, Error> {
    let metadata = TableMetadata {
        units: "N/m",
        method: plan.method.describe(),
        version: env!("CARGO_PKG_VERSION"),
    };
    match &plan.action {
        RunAction::Scalar { layout, currents } => {
            let gx = crate::forces::geometry_factor(layout, Component::X, &plan.method)?;
            let fx = crate::forces::force_from_factor(gx, currents.i1, currents.i2);
            match layout {
                Layout::Adjacent(_) => Ok(OutputTable {
                    columns: vec!["fx"],
                    rows: vec![vec![fx]],
                    metadata,
                }),
                Layout::NonAdjacent(_) => {
                    let gy = crate::forces::geometry_factor(layout, Component::Y, &plan.method)?;
                    let fy = crate::forces::force_from_factor(gy, currents.i1, currents.i2);
                    Ok(OutputTable {
                        columns: vec!["fx", "fy"],
                        rows: vec![vec![fx, fy]],
                        metadata,
                    })
                }
            }
        }
        RunAction::Sweep(sweep) => {
            let result = run_sweep(sweep)?;
            let two_d = sweep.h_range.is_some();
            let mut columns = vec!["d"];
            if two_d {
                columns.push("h");
            }
            columns.push("fx");
            if two_d {
                columns.push("fy");
            }
            let rows = result
                .rows
                .iter()
                .map(|row| {
                    let mut cells = vec![row.d];
                    if let Some(h) = row.h {
                        cells.push(h);
                    }
                    if let Some(fx) = row.fx {
                        cells.push(fx);
                    }
                    if let Some(fy) = row.fy {
                        cells.push(fy);
                    }
                    cells
                })
                .collect();
            Ok(OutputTable {
                columns,
                rows,
                metadata,
            })
        }
        RunAction::Timeseries {
            layout,
            times,
            series,
        } => {
            let two_d = matches!(layout, Layout::NonAdjacent(_));
            let components: &[Component] = if two_d {
                &[Component::X, Component::Y]
            } else {
                &[Component::X]
            };
            let forces = force_series(layout, series, components, &plan.method)?;
            let mut columns = vec!["t", "i1", "i2", "fx"];
            if two_d {
                columns.push("fy");
            }
            let rows = times
                .iter()
                .zip(series.samples())
                .zip(&forces)
                .map(|((t, pair), force)| {
                    let mut cells = vec![*t, pair.i1, pair.i2, force.fx];
                    if two_d {
                        cells.push(force.fy);
                    }
                    cells
                })
                .collect();
            Ok(OutputTable {
                columns,
                rows,
                metadata,
            })
        }
    }
}

/// Plan, execute, and emit a config in one step.
pub fn run_config(config: &RunConfig) -> Result<(), CliError> {
    let plan = config.plan()?;
    let table = execute_plan(&plan)?;
    emit(&table, plan.format, plan.path.as_deref())?;
    Ok(())
}

/// Read and parse a config file.
pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(RunConfig::from_json(&text)?)
}
