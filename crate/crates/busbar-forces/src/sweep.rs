//! Parametric sweep engine: 1-D sweeps over `d` and 2-D grids over
//! `d x h`, with all-or-nothing validation of every grid point before any
//! computation starts.

use crate::forces::{adjacent_fx, non_adjacent_fx, non_adjacent_fy, MethodSpec};
use crate::kernels::Component;
use crate::model::{validate_adjacent, validate_non_adjacent, CrossSection, CurrentPair};
use crate::util::linspace;
use crate::{Error, Result};

/// Inclusive linear range: `count` points from `start` to `stop`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinRange {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl LinRange {
    pub fn values(&self) -> Vec<f64> {
        linspace(self.start, self.stop, self.count)
    }
}

/// Configuration of one sweep. `h_range = None` sweeps adjacent layouts,
/// otherwise the full `d x h` grid of non-adjacent layouts.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Half-width (m).
    pub a: f64,
    /// Half-height (m).
    pub b: f64,
    pub d_range: LinRange,
    pub h_range: Option<LinRange>,
    pub currents: CurrentPair,
    pub components: Vec<Component>,
    pub method: MethodSpec,
}

/// One output row; `h` is present only for 2-D sweeps, force components
/// only when requested.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub d: f64,
    pub h: Option<f64>,
    pub fx: Option<f64>,
    pub fy: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepMetadata {
    pub method: MethodSpec,
    pub units: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub metadata: SweepMetadata,
}

/// Run a sweep. Row order is deterministic: ascending `d` for 1-D sweeps;
/// for 2-D grids the rows iterate `h` in the outer loop and `d` in the
/// inner one (row-major in `(h, d)`), matching the nested loops of the
/// built-in reference scenarios.
///
/// Every grid point is validated first; if any fails, the error enumerates
/// all offending points and nothing is computed.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult> {
    let section = CrossSection::new(config.a, config.b)?;
    if config.components.is_empty() {
        return Err(Error::Config("no components requested".into()));
    }
    if config.d_range.count == 0 || config.h_range.is_some_and(|r| r.count == 0) {
        return Err(Error::Config("range counts must be >= 1".into()));
    }
    let currents = config.currents;

    let ds = config.d_range.values();
    let hs = config.h_range.map(|r| r.values());

    // All-or-nothing gate: collect every invalid grid point up front so
    // partial output never exists.
    let mut problems = Vec::new();
    match &hs {
        None => {
            for &d in &ds {
                if let Err(e) = validate_adjacent(section, d) {
                    problems.push(format!("d = {d}: {e}"));
                }
            }
        }
        Some(hs) => {
            for &h in hs {
                for &d in &ds {
                    if let Err(e) = validate_non_adjacent(section, d, h) {
                        problems.push(format!("d = {d}, h = {h}: {e}"));
                    }
                }
            }
        }
    }
    if !problems.is_empty() {
        return Err(Error::Config(format!(
            "{} invalid grid point(s): {}",
            problems.len(),
            problems.join("; ")
        )));
    }

    let want_x = config.components.contains(&Component::X);
    let want_y = config.components.contains(&Component::Y);
    let mut rows = Vec::new();
    match &hs {
        None => {
            for &d in &ds {
                let fx = want_x
                    .then(|| adjacent_fx(config.a, config.b, d, currents.i1, currents.i2, &config.method))
                    .transpose()?;
                // The y component of an adjacent pair vanishes identically.
                let fy = want_y.then_some(0.0);
                rows.push(SweepRow { d, h: None, fx, fy });
            }
        }
        Some(hs) => {
            for &h in hs {
                for &d in &ds {
                    let fx = want_x
                        .then(|| {
                            non_adjacent_fx(config.a, config.b, d, h, currents.i1, currents.i2, &config.method)
                        })
                        .transpose()?;
                    let fy = want_y
                        .then(|| {
                            non_adjacent_fy(config.a, config.b, d, h, currents.i1, currents.i2, &config.method)
                        })
                        .transpose()?;
                    rows.push(SweepRow { d, h: Some(h), fx, fy });
                }
            }
        }
    }

    Ok(SweepResult {
        rows,
        metadata: SweepMetadata {
            method: config.method,
            units: "N/m",
            version: env!("CARGO_PKG_VERSION"),
        },
    })
}
