//! Analytical fast path: 9-point corner-stencil evaluation of the geometry
//! factor.
//!
//! The second distributional derivative of the triangular hat `w_c` is the
//! three-point stencil `delta(s + 2c) - 2 delta(s) + delta(s - 2c)`, so the
//! hat-weighted 2-D integral of any kernel collapses to a `(1, -2, 1)`
//! tensor stencil applied to a fourth antiderivative `P` of that kernel
//! (twice in each variable):
//!
//! ```text
//! G = 1/(4ab)^2 * sum_{i,j in {-1,0,1}} c_i c_j P(d + 2a*i, h + 2b*j)
//! ```
//!
//! For the x kernel `u/(u^2+v^2)` the antiderivative is the arctan/log
//! family
//!
//! ```text
//! P(u, v) = (u v^2/4 - u^3/12) ln(u^2+v^2)
//!         + (u^2 v/2) atan(v/u) + (v^3/6) atan(u/v)
//! ```
//!
//! (derived by symbolic integration; terms that are pure functions of `u` or
//! `v`, or linear in either variable, are annihilated by the stencil and
//! omitted). `P` is odd in `u` and even in `v`, matching the kernel's parity.
//! The identity is exact, so the stencil agrees with the quadrature path up
//! to floating-point rounding; compensated summation keeps the 9-term
//! cancellation under control at large separations.

use crate::kernels::Component;
use crate::model::Layout;
use crate::quadrature::GeometryFactor;
use crate::util::neumaier_sum;
use crate::{Error, Result};

/// Fourth antiderivative of `u/(u^2+v^2)` (twice in `u`, twice in `v`),
/// units m^2, extended continuously to the axes.
///
/// Each arctan term is written so that its cubic prefactor vanishing forces
/// the whole term to zero, which is exactly the continuous limit on the
/// corresponding axis; nothing is left to floating-point luck.
pub fn primitive_p(u: f64, v: f64) -> Result<f64> {
    if u == 0.0 && v == 0.0 {
        return Err(Error::Domain(
            "primitive is singular at the origin (u, v) = (0, 0)".into(),
        ));
    }
    Ok(primitive_p_raw(u, v))
}

#[inline]
fn primitive_p_raw(u: f64, v: f64) -> f64 {
    let r2 = u * u + v * v;
    let log_term = {
        let coeff = u * v * v / 4.0 - u * u * u / 12.0;
        if coeff == 0.0 {
            0.0
        } else {
            coeff * r2.ln()
        }
    };
    log_term + atan_term(u * u * v / 2.0, v, u) + atan_term(v * v * v / 6.0, u, v)
}

/// `coeff * atan(num/den)` with the `coeff = 0` limit taken explicitly
/// (covers the axes, where `num/den` may be infinite).
#[inline]
fn atan_term(coeff: f64, num: f64, den: f64) -> f64 {
    if coeff == 0.0 {
        0.0
    } else {
        coeff * (num / den).atan()
    }
}

/// 1-D coefficient triple applied at the knots `{-2c, 0, +2c}`; the tensor
/// product of two copies forms the 9-point corner stencil. The coefficients
/// sum to zero, so constants (and anything affine per variable) cancel.
pub const STENCIL_COEFFICIENTS: [f64; 3] = [1.0, -2.0, 1.0];

/// Apply the `(1,-2,1) x (1,-2,1)` corner stencil of half-steps `2a`, `2b`
/// centered at `(d, h)` to an arbitrary primitive, with compensated
/// summation over the 9 terms.
pub fn stencil_sum<F>(primitive: F, d: f64, h: f64, a: f64, b: f64) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    const OFFSET: [f64; 3] = [-1.0, 0.0, 1.0];
    let mut terms = [0.0; 9];
    let mut k = 0;
    for i in 0..3 {
        let u = d + 2.0 * a * OFFSET[i];
        for j in 0..3 {
            let v = h + 2.0 * b * OFFSET[j];
            terms[k] = STENCIL_COEFFICIENTS[i] * STENCIL_COEFFICIENTS[j] * primitive(u, v);
            k += 1;
        }
    }
    neumaier_sum(terms)
}

/// Geometry factor for one component via the closed-form corner stencil.
///
/// Exact up to rounding for any validated layout: the strict constraints
/// `d > 2a`, `h > 2b` (or `h = 0` handled by the axis limits of `P`) keep
/// every knot off the origin.
pub fn stencil_geometry_factor(layout: &Layout, component: Component) -> Result<GeometryFactor> {
    let section = layout.section();
    let (a, b) = (section.a(), section.b());
    let (d, h) = (layout.d(), layout.h());

    for i in [-1.0, 0.0, 1.0] {
        for j in [-1.0, 0.0, 1.0] {
            let (u, v) = (d + 2.0 * a * i, h + 2.0 * b * j);
            if u == 0.0 && v == 0.0 {
                return Err(Error::Domain(
                    "stencil knot hit the kernel singularity; layout is not valid".into(),
                ));
            }
        }
    }

    // The y stencil swaps the primitive's arguments, mirroring
    // kernel_y(l, m) = kernel_x(m, l).
    let sum = match component {
        Component::X => stencil_sum(primitive_p_raw, d, h, a, b),
        Component::Y => stencil_sum(|u, v| primitive_p_raw(v, u), d, h, a, b),
    };
    let area = 4.0 * a * b;
    Ok(GeometryFactor {
        value: sum / (area * area),
    })
}
