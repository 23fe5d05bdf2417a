//! JSON run-configuration schema, its validation into typed run plans, and
//! the built-in reproductions of the three reference scenarios.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::forces::{CurrentSeries, Method, MethodSpec};
use crate::kernels::Component;
use crate::model::{validate_adjacent, validate_non_adjacent, CrossSection, CurrentPair, Layout};
use crate::sweep::{LinRange, SweepConfig};
use crate::util::linspace;
use crate::{Error, Result};

use super::output::OutputFormat;

/// Top-level config document. Unknown keys are rejected everywhere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub mode: Mode,
    pub geometry: GeometryConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub currents: Option<CurrentsConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub waveform: Option<WaveformConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<MethodConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputConfig>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Adjacent,
    NonAdjacent,
    Sweep,
    Timeseries,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Adjacent => "adjacent",
            Mode::NonAdjacent => "non-adjacent",
            Mode::Sweep => "sweep",
            Mode::Timeseries => "timeseries",
        }
    }
}

/// `d` (and `h` in sweep mode) may be a single value or a linear range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarOrRange {
    Scalar(f64),
    Range(RangeConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RangeConfig {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryConfig {
    pub a: f64,
    pub b: f64,
    pub d: ScalarOrRange,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<ScalarOrRange>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurrentsConfig {
    pub i1: f64,
    pub i2: f64,
}

/// Two sinusoids sharing amplitude and frequency, sampled over a whole
/// number of periods with both endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WaveformConfig {
    pub amplitude: f64,
    pub frequency_hz: f64,
    pub phase1_rad: f64,
    pub phase2_rad: f64,
    pub samples: usize,
    pub periods: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MethodConfig {
    pub name: MethodName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filament_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rel_tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodName {
    ClosedForm,
    ReducedQuadrature,
    #[serde(rename = "direct-4d")]
    Direct4d,
    Filament,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    pub format: OutputFormat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
}

/// A parsed and domain-checked run, ready to execute.
#[derive(Debug, Clone)]
pub struct RunPlan {
    pub action: RunAction,
    pub method: MethodSpec,
    pub format: OutputFormat,
    pub path: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub enum RunAction {
    Scalar {
        layout: Layout,
        currents: CurrentPair,
    },
    Sweep(SweepConfig),
    Timeseries {
        layout: Layout,
        times: Vec<f64>,
        series: CurrentSeries,
    },
}

impl RunConfig {
    /// Parse a JSON document, rejecting unknown keys.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("failed to parse config: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Validate the document into a typed plan (schema and domain checks).
    pub fn plan(&self) -> Result<RunPlan> {
        let method = method_spec(self.method.as_ref())?;
        let (format, path) = match &self.output {
            Some(out) => (out.format, out.path.as_ref().map(PathBuf::from)),
            None => (OutputFormat::Csv, None),
        };

        let geometry = &self.geometry;
        let action = match self.mode {
            Mode::Adjacent => {
                reject_waveform(self)?;
                let d = scalar(geometry.d, "geometry.d")?;
                if geometry.h.is_some() {
                    return Err(Error::Config(
                        "mode 'adjacent' does not take geometry.h".into(),
                    ));
                }
                let section = CrossSection::new(geometry.a, geometry.b)?;
                RunAction::Scalar {
                    layout: Layout::from(validate_adjacent(section, d)?),
                    currents: currents(self)?,
                }
            }
            Mode::NonAdjacent => {
                reject_waveform(self)?;
                let d = scalar(geometry.d, "geometry.d")?;
                let h = scalar(
                    geometry.h.ok_or_else(|| {
                        Error::Config("mode 'non-adjacent' requires geometry.h".into())
                    })?,
                    "geometry.h",
                )?;
                let section = CrossSection::new(geometry.a, geometry.b)?;
                RunAction::Scalar {
                    layout: Layout::from(validate_non_adjacent(section, d, h)?),
                    currents: currents(self)?,
                }
            }
            Mode::Sweep => {
                reject_waveform(self)?;
                let d_range = range(geometry.d);
                let h_range = geometry.h.map(range);
                let components = if h_range.is_some() {
                    vec![Component::X, Component::Y]
                } else {
                    vec![Component::X]
                };
                RunAction::Sweep(SweepConfig {
                    a: geometry.a,
                    b: geometry.b,
                    d_range,
                    h_range,
                    currents: currents(self)?,
                    components,
                    method,
                })
            }
            Mode::Timeseries => {
                if self.currents.is_some() {
                    return Err(Error::Config(
                        "mode 'timeseries' takes a waveform, not currents".into(),
                    ));
                }
                let wf = self.waveform.as_ref().ok_or_else(|| {
                    Error::Config("mode 'timeseries' requires a waveform".into())
                })?;
                let d = scalar(geometry.d, "geometry.d")?;
                let section = CrossSection::new(geometry.a, geometry.b)?;
                let layout = match geometry.h {
                    None => Layout::from(validate_adjacent(section, d)?),
                    Some(h) => Layout::from(validate_non_adjacent(
                        section,
                        d,
                        scalar(h, "geometry.h")?,
                    )?),
                };
                let (times, series) = sample_waveform(wf)?;
                RunAction::Timeseries {
                    layout,
                    times,
                    series,
                }
            }
        };
        Ok(RunPlan {
            action,
            method,
            format,
            path,
        })
    }
}

fn scalar(value: ScalarOrRange, field: &str) -> Result<f64> {
    match value {
        ScalarOrRange::Scalar(v) => Ok(v),
        ScalarOrRange::Range(_) => Err(Error::Config(format!(
            "{field} must be a single value in this mode, not a range"
        ))),
    }
}

fn range(value: ScalarOrRange) -> LinRange {
    match value {
        ScalarOrRange::Scalar(v) => LinRange {
            start: v,
            stop: v,
            count: 1,
        },
        ScalarOrRange::Range(r) => LinRange {
            start: r.start,
            stop: r.stop,
            count: r.count,
        },
    }
}

fn currents(config: &RunConfig) -> Result<CurrentPair> {
    let c = config.currents.as_ref().ok_or_else(|| {
        Error::Config(format!("mode '{}' requires currents", config.mode.name()))
    })?;
    CurrentPair::new(c.i1, c.i2)
}

fn reject_waveform(config: &RunConfig) -> Result<()> {
    if config.waveform.is_some() {
        return Err(Error::Config(format!(
            "mode '{}' does not take a waveform",
            config.mode.name()
        )));
    }
    Ok(())
}

fn method_spec(config: Option<&MethodConfig>) -> Result<MethodSpec> {
    let mut spec = MethodSpec::default();
    let Some(config) = config else {
        return Ok(spec);
    };
    spec.method = match config.name {
        MethodName::ClosedForm => Method::ClosedForm,
        MethodName::ReducedQuadrature => Method::ReducedQuadrature,
        MethodName::Direct4d => Method::Direct4D,
        MethodName::Filament => Method::Filament,
    };
    if let Some(order) = config.order {
        if order < 2 {
            return Err(Error::Config(format!(
                "method.order must be >= 2, got {order}"
            )));
        }
        spec.quadrature.order = order;
    }
    if let Some(rel_tol) = config.rel_tol {
        if !(rel_tol > 0.0 && rel_tol.is_finite()) {
            return Err(Error::Config(format!(
                "method.rel_tol must be a positive finite value, got {rel_tol}"
            )));
        }
        spec.quadrature.rel_tol = rel_tol;
    }
    if let Some(n) = config.filament_n {
        if n == 0 {
            return Err(Error::Config("method.filament_n must be >= 1".into()));
        }
        spec.filament_n = n;
    }
    Ok(spec)
}

/// Sample the two sinusoids over `periods / frequency` seconds, endpoints
/// included.
fn sample_waveform(wf: &WaveformConfig) -> Result<(Vec<f64>, CurrentSeries)> {
    if !(wf.frequency_hz > 0.0 && wf.frequency_hz.is_finite()) {
        return Err(Error::Config(format!(
            "waveform.frequency_hz must be positive, got {}",
            wf.frequency_hz
        )));
    }
    if wf.samples == 0 {
        return Err(Error::Config("waveform.samples must be >= 1".into()));
    }
    if !(wf.periods > 0.0 && wf.periods.is_finite()) {
        return Err(Error::Config(format!(
            "waveform.periods must be positive, got {}",
            wf.periods
        )));
    }
    if !wf.amplitude.is_finite() || !wf.phase1_rad.is_finite() || !wf.phase2_rad.is_finite() {
        return Err(Error::Config(
            "waveform amplitude and phases must be finite".into(),
        ));
    }
    let omega = 2.0 * std::f64::consts::PI * wf.frequency_hz;
    let times = linspace(0.0, wf.periods / wf.frequency_hz, wf.samples);
    let pairs: Vec<(f64, f64)> = times
        .iter()
        .map(|&t| {
            (
                wf.amplitude * (omega * t + wf.phase1_rad).sin(),
                wf.amplitude * (omega * t + wf.phase2_rad).sin(),
            )
        })
        .collect();
    let series = CurrentSeries::new(pairs)?.with_timestamps(times.clone())?;
    Ok((times, series))
}

/// Built-in configs reproducing the three reference scenarios verbatim
/// (same sections, ranges, sample counts, and phases).
pub fn example_config(number: u8) -> Result<RunConfig> {
    let geometry_a = 0.005;
    let geometry_b = 0.05;
    match number {
        1 => Ok(RunConfig {
            mode: Mode::Sweep,
            geometry: GeometryConfig {
                a: geometry_a,
                b: geometry_b,
                d: ScalarOrRange::Range(RangeConfig {
                    start: 0.011,
                    stop: 0.2,
                    count: 15,
                }),
                h: None,
            },
            currents: Some(CurrentsConfig { i1: 1.0, i2: 1.0 }),
            waveform: None,
            method: None,
            output: None,
        }),
        2 => Ok(RunConfig {
            mode: Mode::Timeseries,
            geometry: GeometryConfig {
                a: geometry_a,
                b: geometry_b,
                d: ScalarOrRange::Scalar(0.02),
                h: None,
            },
            currents: None,
            waveform: Some(WaveformConfig {
                amplitude: 1.0,
                frequency_hz: 50.0,
                phase1_rad: 0.0,
                phase2_rad: std::f64::consts::FRAC_PI_2,
                samples: 500,
                periods: 1.0,
            }),
            method: None,
            output: None,
        }),
        3 => Ok(RunConfig {
            mode: Mode::Sweep,
            geometry: GeometryConfig {
                a: geometry_a,
                b: geometry_b,
                d: ScalarOrRange::Range(RangeConfig {
                    start: 0.011,
                    stop: 0.2,
                    count: 15,
                }),
                h: Some(ScalarOrRange::Range(RangeConfig {
                    start: 0.11,
                    stop: 0.2,
                    count: 8,
                })),
            },
            currents: Some(CurrentsConfig { i1: 1.0, i2: 1.0 }),
            waveform: None,
            method: None,
            output: None,
        }),
        other => Err(Error::Config(format!(
            "example number must be 1, 2, or 3, got {other}"
        ))),
    }
}
