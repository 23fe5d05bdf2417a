//! Per-unit-length electrodynamic forces between two massive rectangular
//! conductors carrying homogeneous current density.
//!
//! Both conductors share the same cross-section (width `2a`, height `2b`) and
//! run parallel to each other; the second one is offset by a horizontal
//! center-to-center distance `d` and, for non-adjacent layouts, a vertical
//! offset `h`. Forces are reported per unit length (N/m) on conductor 1, with
//! conductor 2 at `(+d, +h)`, so same-sign currents give attractive
//! (positive) components.
//!
//! Three mutually validating evaluation paths are provided:
//!
//! * [`closedform`] — a 9-point corner-stencil evaluation of an analytical
//!   primitive (the fast path),
//! * [`quadrature`] — Gauss–Legendre evaluation of the defining integral,
//!   either reduced exactly to 2-D or directly in 4-D,
//! * [`filament`] — conductor discretization into thin wires summed pairwise
//!   (the independent cross-check).
//!
//! The high-level API lives in [`forces`]; parametric sweeps in [`sweep`];
//! the CLI front end in [`cli`].

pub mod cli;
pub mod closedform;
pub mod filament;
pub mod forces;
pub mod kernels;
pub mod model;
pub mod quadrature;
pub mod sweep;

mod util;

pub use forces::{adjacent_fx, force_series, non_adjacent_fx, non_adjacent_fy};
pub use forces::{CurrentSeries, Method, MethodSpec};
pub use model::{
    validate_adjacent, validate_non_adjacent, AdjacentLayout, CrossSection, CurrentPair,
    ForcePerLength, Layout, NonAdjacentLayout,
};
pub use quadrature::{GeometryFactor, QuadratureSpec};

/// Vacuum permeability (N/A^2).
pub const MU_0: f64 = 4.0e-7 * std::f64::consts::PI;

/// `mu_0 / (2 pi)`, the shared prefactor of every per-unit-length force here.
pub const MU0_OVER_2PI: f64 = 2.0e-7;

/// Errors produced by validation, quadrature, and configuration parsing.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Geometry or evaluation point outside the domain of validity.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed argument (e.g. a zero-point quadrature rule).
    #[error("argument error: {0}")]
    Argument(String),

    /// Adaptive quadrature exhausted its subdivision budget.
    ///
    /// `best` is the estimate at the deepest level reached; `achieved` the
    /// worst per-panel relative discrepancy, to be compared against `target`.
    #[error("quadrature did not converge: best estimate {best:e}, achieved relative error {achieved:e} (target {target:e})")]
    Convergence { best: f64, achieved: f64, target: f64 },

    /// Invalid run or sweep configuration; the message lists every problem.
    #[error("invalid configuration: {0}")]
    Config(String),
}

/// Shorthand result type used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
