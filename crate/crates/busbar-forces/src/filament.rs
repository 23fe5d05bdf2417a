//! Independent verification path: discretize each conductor into a grid of
//! thin filaments at cell midpoints and sum pairwise parallel-wire forces.
//!
//! Each conductor is split into `nx * ny` cells carrying `i/(nx*ny)` each;
//! the force is the plain double sum of the thin-wire law over all filament
//! pairs. Because the kernel depends only on the coordinate differences
//! `x_q - x_p = k * dx` and `y_q - y_p = j * dy`, the `(nx*ny)^2` pairs are
//! regrouped exactly into `(2nx-1)(2ny-1)` distinct separations with integer
//! multiplicities `(nx - |k|)(ny - |j|)` — the same sum, O(N^2) instead of
//! O(N^4). Equality with the literal pairwise loop is pinned by a unit test.
//!
//! Midpoint placement keeps every pair strictly separated for valid layouts
//! and makes the discretization second-order accurate.

use crate::model::{CrossSection, CurrentPair, ForcePerLength, Layout};
use crate::quadrature::GeometryFactor;
use crate::{Error, Result};
use crate::{kernels::Component, MU0_OVER_2PI};

/// Midpoint discretization of one cross-section into `nx * ny` filaments.
///
/// Filament `(p, q)` sits at the center of cell `(p, q)`; each carries
/// `i / (nx * ny)`, so the filament currents partition the conductor
/// current by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilamentGrid {
    pub nx: usize,
    pub ny: usize,
}

impl FilamentGrid {
    pub fn new(nx: usize, ny: usize) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::Argument(
                "filament grid needs nx >= 1 and ny >= 1".into(),
            ));
        }
        Ok(Self { nx, ny })
    }

    /// Cell-midpoint positions in conductor-local coordinates
    /// (`x` in `[0, 2a]`, `y` in `[-b, b]`), row-major in `(p, q)`.
    pub fn positions(&self, section: CrossSection) -> Vec<(f64, f64)> {
        let dx = 2.0 * section.a() / self.nx as f64;
        let dy = 2.0 * section.b() / self.ny as f64;
        let mut out = Vec::with_capacity(self.nx * self.ny);
        for p in 0..self.nx {
            for q in 0..self.ny {
                out.push((
                    (p as f64 + 0.5) * dx,
                    -section.b() + (q as f64 + 0.5) * dy,
                ));
            }
        }
        out
    }

    /// Current carried by each filament (A).
    pub fn filament_current(&self, conductor_current: f64) -> f64 {
        conductor_current / (self.nx * self.ny) as f64
    }
}

/// Raw kernel sums over all filament pairs for conductor offsets `(d, h)`,
/// returned as `(sum_x, sum_y)` before any current or `1/(nx*ny)^2` scaling.
///
/// Exposed unvalidated so symmetry checks can place conductor 2 at negative
/// offsets; sign groups are paired so that `(d, h) -> (-d, -h)` negates both
/// sums bit-for-bit.
pub fn filament_sums(
    a: f64,
    b: f64,
    d: f64,
    h: f64,
    nx: usize,
    ny: usize,
) -> Result<(f64, f64)> {
    if nx == 0 || ny == 0 {
        return Err(Error::Argument(
            "filament grid needs nx >= 1 and ny >= 1".into(),
        ));
    }
    let dx = 2.0 * a / nx as f64;
    let dy = 2.0 * b / ny as f64;

    let mut sum_x = 0.0;
    let mut sum_y = 0.0;
    for k in 0..nx {
        let off_x = k as f64 * dx;
        let lp = d + off_x;
        let lm = d - off_x;
        let wk = (nx - k) as f64;
        for j in 0..ny {
            let off_y = j as f64 * dy;
            let mp = h + off_y;
            let mm = h - off_y;

            if (lp == 0.0 || (k > 0 && lm == 0.0)) && (mp == 0.0 || (j > 0 && mm == 0.0)) {
                return Err(Error::Domain(
                    "coincident filament pair: kernel singularity reached".into(),
                ));
            }

            let w = wk * (ny - j) as f64;
            let (gx, gy) = match (k > 0, j > 0) {
                (false, false) => (kernel(Component::X, d, h), kernel(Component::Y, d, h)),
                (true, false) => (
                    kernel(Component::X, lp, h) + kernel(Component::X, lm, h),
                    kernel(Component::Y, lp, h) + kernel(Component::Y, lm, h),
                ),
                (false, true) => (
                    kernel(Component::X, d, mp) + kernel(Component::X, d, mm),
                    kernel(Component::Y, d, mp) + kernel(Component::Y, d, mm),
                ),
                (true, true) => (
                    (kernel(Component::X, lp, mp) + kernel(Component::X, lp, mm))
                        + (kernel(Component::X, lm, mp) + kernel(Component::X, lm, mm)),
                    (kernel(Component::Y, lp, mp) + kernel(Component::Y, lp, mm))
                        + (kernel(Component::Y, lm, mp) + kernel(Component::Y, lm, mm)),
                ),
            };
            sum_x += w * gx;
            sum_y += w * gy;
        }
    }
    Ok((sum_x, sum_y))
}

#[inline]
fn kernel(component: Component, l: f64, m: f64) -> f64 {
    component.kernel_raw(l, m)
}

/// Geometry factor of one component by the filament discretization with an
/// `n x n` grid per conductor.
pub fn filament_geometry_factor(
    layout: &Layout,
    component: Component,
    n: usize,
) -> Result<GeometryFactor> {
    let section = layout.section();
    let (sum_x, sum_y) = filament_sums(
        section.a(),
        section.b(),
        layout.d(),
        layout.h(),
        n,
        n,
    )?;
    let cells = (n * n) as f64;
    let value = match component {
        Component::X => sum_x,
        Component::Y => sum_y,
    } / (cells * cells);
    Ok(GeometryFactor { value })
}

/// Per-unit-length force on conductor 1 from the filament discretization.
///
/// `Fx = mu0 i1 i2 / (2 pi nx^2 ny^2) * sum l/(l^2+m^2)` over all pairs,
/// and the same with `m` in the numerator for `Fy`; the sign convention
/// matches the analytic paths (attraction toward conductor 2 is positive).
pub fn filament_force(
    layout: &Layout,
    currents: CurrentPair,
    nx: usize,
    ny: usize,
) -> Result<ForcePerLength> {
    let section = layout.section();
    let (sum_x, sum_y) = filament_sums(
        section.a(),
        section.b(),
        layout.d(),
        layout.h(),
        nx,
        ny,
    )?;
    let cells = (nx * nx * ny * ny) as f64;
    let scale = MU0_OVER_2PI * currents.i1 * currents.i2 / cells;
    Ok(ForcePerLength {
        fx: scale * sum_x,
        fy: scale * sum_y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::stencil_geometry_factor;
    use crate::model::{validate_adjacent, validate_non_adjacent, CrossSection};
    use approx::assert_relative_eq;

    fn adjacent(a: f64, b: f64, d: f64) -> Layout {
        Layout::from(validate_adjacent(CrossSection::new(a, b).unwrap(), d).unwrap())
    }

    fn non_adjacent(a: f64, b: f64, d: f64, h: f64) -> Layout {
        Layout::from(validate_non_adjacent(CrossSection::new(a, b).unwrap(), d, h).unwrap())
    }

    /// The sum as literally defined: every filament pair visited once.
    fn pairwise_sums(a: f64, b: f64, d: f64, h: f64, nx: usize, ny: usize) -> (f64, f64) {
        let section = CrossSection::new(a, b).unwrap();
        let positions = FilamentGrid::new(nx, ny).unwrap().positions(section);
        let mut sx = 0.0;
        let mut sy = 0.0;
        for &(x1, y1) in &positions {
            for &(x2, y2) in &positions {
                let l = d + x2 - x1;
                let m = h + y2 - y1;
                sx += l / (l * l + m * m);
                sy += m / (l * l + m * m);
            }
        }
        (sx, sy)
    }

    #[test]
    fn grid_positions_are_cell_midpoints() {
        let section = CrossSection::new(0.005, 0.05).unwrap();
        let grid = FilamentGrid::new(2, 2).unwrap();
        let positions = grid.positions(section);
        assert_eq!(positions.len(), 4);
        assert_relative_eq!(positions[0].0, 0.0025, max_relative = 1e-15);
        assert_relative_eq!(positions[0].1, -0.025, max_relative = 1e-15);
        assert_relative_eq!(positions[3].0, 0.0075, max_relative = 1e-15);
        assert_relative_eq!(positions[3].1, 0.025, max_relative = 1e-15);
        assert!(FilamentGrid::new(0, 4).is_err());
    }

    #[test]
    fn filament_currents_partition_the_conductor_current() {
        // Power-of-two cell counts divide exactly in binary floating point.
        let grid = FilamentGrid::new(16, 16).unwrap();
        let per_filament = grid.filament_current(1.0);
        assert_eq!(per_filament * 256.0, 1.0);
        let odd = FilamentGrid::new(3, 5).unwrap();
        let total = odd.filament_current(2.5) * 15.0;
        assert!((total - 2.5).abs() <= f64::EPSILON * 2.5);
    }

    #[test]
    fn grouped_sum_equals_literal_pairwise_sum() {
        for (nx, ny) in [(1, 1), (2, 3), (5, 4), (7, 7)] {
            let (gx, gy) = filament_sums(0.005, 0.05, 0.013, 0.02, nx, ny).unwrap();
            let (px, py) = pairwise_sums(0.005, 0.05, 0.013, 0.02, nx, ny);
            assert_relative_eq!(gx, px, max_relative = 1e-13);
            assert_relative_eq!(gy, py, max_relative = 1e-13);
        }
    }

    #[test]
    fn single_filament_is_the_thin_wire_formula() {
        let layout = non_adjacent(0.005, 0.05, 0.3, 0.4);
        let f = filament_force(&layout, CurrentPair::new(2.0, 3.0).unwrap(), 1, 1).unwrap();
        let r2 = 0.3f64 * 0.3 + 0.4 * 0.4;
        assert_relative_eq!(f.fx, MU0_OVER_2PI * 6.0 * 0.3 / r2, max_relative = 1e-15);
        assert_relative_eq!(f.fy, MU0_OVER_2PI * 6.0 * 0.4 / r2, max_relative = 1e-15);
    }

    #[test]
    fn zero_current_gives_zero_force() {
        let layout = adjacent(0.005, 0.05, 0.02);
        let f = filament_force(&layout, CurrentPair::new(0.0, 5.0).unwrap(), 8, 8).unwrap();
        assert_eq!(f.fx, 0.0);
        assert_eq!(f.fy, 0.0);
    }

    #[test]
    fn adjacent_y_force_cancels_exactly() {
        let layout = adjacent(0.005, 0.05, 0.011);
        let f = filament_force(&layout, CurrentPair::new(1.0, 1.0).unwrap(), 16, 16).unwrap();
        assert_eq!(f.fy, 0.0);
        assert!(f.fx > 0.0);
    }

    #[test]
    fn swapping_conductor_roles_negates_both_sums_exactly() {
        // Conductor 2 seen from conductor 1 at (-d, -h): same summation
        // relabeled, so both components negate bit-for-bit.
        for (d, h, nx, ny) in [(0.013, 0.17, 9, 7), (0.02, 0.0, 12, 5), (0.4, 0.25, 16, 16)] {
            let (sx, sy) = filament_sums(0.005, 0.05, d, h, nx, ny).unwrap();
            let (rx, ry) = filament_sums(0.005, 0.05, -d, -h, nx, ny).unwrap();
            assert_eq!(rx, -sx);
            assert_eq!(ry, -sy);
        }
    }

    #[test]
    fn coincident_filaments_are_rejected() {
        // Unvalidated offsets can line the grids up exactly: d = 0 and
        // h = 0 puts every filament of conductor 2 on top of conductor 1.
        assert!(filament_sums(0.005, 0.05, 0.0, 0.0, 4, 4).is_err());
    }

    #[test]
    fn converges_to_the_closed_form() {
        let layout = adjacent(0.005, 0.05, 0.02);
        let exact = stencil_geometry_factor(&layout, Component::X).unwrap().value;
        let mut prev_err = f64::INFINITY;
        for n in [16, 32, 64] {
            let g = filament_geometry_factor(&layout, Component::X, n).unwrap().value;
            let err = ((g - exact) / exact).abs();
            assert!(err < prev_err, "n = {n}: error {err:e} did not shrink");
            prev_err = err;
        }
        assert!(prev_err < 1e-3);
    }
}
