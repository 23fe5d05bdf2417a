//! Integrand kernels of the force integrals and the difference-coordinate
//! mapping from conductor-local coordinates to filament separations.
//!
//! For two parallel filaments separated by `(l, m)` the per-unit-length force
//! density is proportional to `1/sqrt(l^2+m^2)` times the direction cosine
//! `l/sqrt(l^2+m^2)` (or `m/...` for the y component), so the kernels reduce
//! to `l/(l^2+m^2)` and `m/(l^2+m^2)` (units 1/m). The current factor
//! `mu0 * J1 * J2 / (2 pi)` with `J_k = i_k / (4ab)` is applied outside.

use crate::model::Layout;
use crate::{Error, Result};

/// Which force component a kernel or geometry factor refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    X,
    Y,
}

impl Component {
    /// Kernel value for this component, unchecked: the caller must keep
    /// `(l, m)` away from the origin (guaranteed inside any valid layout's
    /// integration domain).
    #[inline]
    pub(crate) fn kernel_raw(self, l: f64, m: f64) -> f64 {
        match self {
            Component::X => l / (l * l + m * m),
            Component::Y => m / (l * l + m * m),
        }
    }
}

/// Separation of two filaments: `l` horizontal, `m` vertical (m).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffCoords {
    pub l: f64,
    pub m: f64,
}

/// Per-unit-length Biot-Savart force density between two parallel filaments
/// carrying homogeneous current densities `j1`, `j2` (A/m^2):
/// `f = mu0 j1 j2 / (2 pi sqrt(l^2 + m^2))`.
///
/// The full integrand of the x force is `f * l / sqrt(l^2+m^2)`, i.e.
/// `mu0 j1 j2 / (2 pi) * kernel_x(l, m)`; nonnegative whenever
/// `j1 * j2 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelDensity {
    pub f: f64,
}

/// Force density of a filament pair separated by `coords`.
pub fn kernel_density(coords: DiffCoords, j1: f64, j2: f64) -> Result<KernelDensity> {
    let r2 = coords.l * coords.l + coords.m * coords.m;
    if r2 == 0.0 {
        return Err(Error::Domain(
            "kernel is singular at coincident filaments (l, m) = (0, 0)".into(),
        ));
    }
    Ok(KernelDensity {
        f: crate::MU0_OVER_2PI * j1 * j2 / r2.sqrt(),
    })
}

/// `l / (l^2 + m^2)`: the x-component kernel. Odd in `l`, even in `m`.
pub fn kernel_x(l: f64, m: f64) -> Result<f64> {
    if l == 0.0 && m == 0.0 {
        return Err(Error::Domain(
            "kernel is singular at coincident filaments (l, m) = (0, 0)".into(),
        ));
    }
    Ok(Component::X.kernel_raw(l, m))
}

/// `m / (l^2 + m^2)`: the y-component kernel. Equals `kernel_x(m, l)`.
pub fn kernel_y(l: f64, m: f64) -> Result<f64> {
    if l == 0.0 && m == 0.0 {
        return Err(Error::Domain(
            "kernel is singular at coincident filaments (l, m) = (0, 0)".into(),
        ));
    }
    Ok(Component::Y.kernel_raw(l, m))
}

/// Map conductor-local coordinates to the filament separation.
///
/// `x1, x2` lie in `[0, 2a]` and `y1, y2` in `[-b, b]` (caller guarantees the
/// ranges); the separation is `l = d + x2 - x1`, `m = h + y2 - y1` with
/// `h = 0` for adjacent layouts.
pub fn diff_coords(x1: f64, x2: f64, y1: f64, y2: f64, layout: &Layout) -> DiffCoords {
    DiffCoords {
        l: layout.d() + x2 - x1,
        m: layout.h() + y2 - y1,
    }
}
