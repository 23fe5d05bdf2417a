//! Numerical evaluation of the fourfold force integral, either directly in
//! 4-D or via the exact reduction to a 2-D hat-weighted integral.
//!
//! The fourfold integral over both cross-sections depends on the local
//! coordinates only through the differences `x2 - x1` and `y2 - y1`. The
//! density of `x2 - x1` when both run over `[0, 2a]` is the triangular hat
//! `w_a(s) = 2a - |s|` on `[-2a, 2a]`, so the 4-D integral collapses exactly
//! to
//!
//! ```text
//! G = 1/(4ab)^2 * Int w_a(u - d) * w_b(v - h) * kernel(u, v) du dv
//! ```
//!
//! over `[d-2a, d+2a] x [h-2b, h+2b]`. The hat weight is only piecewise
//! linear, so the domain is split into 4 panels at the kinks `u = d`,
//! `v = h`; Gauss-Legendre then converges spectrally on each panel, with
//! adaptive bisection taking over near the `d - 2a -> 0` corner.

use crate::kernels::Component;
use crate::model::Layout;
use crate::{Error, Result};

/// Parameters of the Gauss-Legendre evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Gauss-Legendre points per panel per dimension (>= 2).
    pub order: usize,
    /// Adaptive panel bisection depth; 0 disables refinement.
    pub max_subdivisions: usize,
    /// Target relative tolerance for the order-n vs order-2n panel check.
    pub rel_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            order: 32,
            max_subdivisions: 6,
            rel_tol: 1e-10,
        }
    }
}

/// Current-independent part of the force: `F = mu0/(2 pi) * i1 * i2 * G`.
/// Units 1/m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryFactor {
    pub value: f64,
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
///
/// Exact for polynomials up to degree `2n - 1`; the weights sum to 2.
pub fn gauss_legendre_rule(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::Argument(
            "Gauss-Legendre rule requires at least one point".into(),
        ));
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based initial guess, refined by Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-15 * x.abs().max(1.0) {
                break;
            }
        }
        // The weight needs the derivative at the converged node, not at the
        // last Newton iterate.
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x descends from near +1; mirror to keep the rule exactly symmetric.
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
        if n % 2 == 1 && i == m - 1 {
            nodes[i] = 0.0;
        }
    }
    Ok((nodes, weights))
}

/// `P_n(x)` and `P_n'(x)` via the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let k_f = k as f64;
        let next = ((2.0 * k_f + 1.0) * x * p - k_f * p_prev) / (k_f + 1.0);
        p_prev = p;
        p = next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Axis-aligned integration panel `[u0, u1] x [v0, v1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Panel {
    pub u0: f64,
    pub u1: f64,
    pub v0: f64,
    pub v1: f64,
}

/// The exact 2-D reduction of the fourfold integral for one layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedIntegral {
    a: f64,
    b: f64,
    d: f64,
    h: f64,
}

/// Describe the reduced integral for a validated layout.
pub fn reduce_to_2d(layout: &Layout) -> ReducedIntegral {
    let section = layout.section();
    ReducedIntegral {
        a: section.a(),
        b: section.b(),
        d: layout.d(),
        h: layout.h(),
    }
}

impl ReducedIntegral {
    /// Hat weight `w_a(u - d) * w_b(v - h)`; the exact joint density (up to
    /// normalization) of the coordinate differences.
    pub fn weight(&self, u: f64, v: f64) -> f64 {
        hat(u - self.d, 2.0 * self.a) * hat(v - self.h, 2.0 * self.b)
    }

    /// `1/(4ab)^2`: with this factor the weighted integral of the constant
    /// kernel 1 is exactly 1.
    pub fn normalization(&self) -> f64 {
        let area = 4.0 * self.a * self.b;
        1.0 / (area * area)
    }

    /// The four panels obtained by splitting the support at the hat kinks
    /// `u = d`, `v = h`, in a fixed deterministic order.
    pub fn panels(&self) -> [Panel; 4] {
        let (a2, b2) = (2.0 * self.a, 2.0 * self.b);
        let (d, h) = (self.d, self.h);
        [
            Panel { u0: d - a2, u1: d, v0: h - b2, v1: h },
            Panel { u0: d - a2, u1: d, v0: h, v1: h + b2 },
            Panel { u0: d, u1: d + a2, v0: h - b2, v1: h },
            Panel { u0: d, u1: d + a2, v0: h, v1: h + b2 },
        ]
    }

    /// Integrate `kernel` against the hat weight over all panels, including
    /// the normalization, with per-panel adaptive refinement.
    pub fn integrate<F>(&self, kernel: F, spec: &QuadratureSpec) -> Result<f64>
    where
        F: Fn(f64, f64) -> f64,
    {
        if spec.order < 2 {
            return Err(Error::Argument(format!(
                "quadrature order must be >= 2, got {}",
                spec.order
            )));
        }
        let coarse = gauss_legendre_rule(spec.order)?;
        let fine = gauss_legendre_rule(2 * spec.order)?;
        let f = |u: f64, v: f64| self.weight(u, v) * kernel(u, v);

        let mut total = 0.0;
        let mut unresolved = 0.0;
        for panel in self.panels() {
            total += refine_panel(
                &f,
                panel,
                0,
                spec,
                &coarse,
                &fine,
                &mut unresolved,
            );
        }
        let value = total * self.normalization();
        // Unresolved panel discrepancies are compared against the whole
        // integral: a deep corner that never settles still fails loudly.
        let scale = total.abs().max(f64::MIN_POSITIVE);
        let achieved = unresolved / scale;
        if achieved > spec.rel_tol {
            return Err(Error::Convergence {
                best: value,
                achieved,
                target: spec.rel_tol,
            });
        }
        Ok(value)
    }
}

/// Triangular hat of half-support `width`: `width - |s|` clamped at zero.
fn hat(s: f64, width: f64) -> f64 {
    (width - s.abs()).max(0.0)
}

type Rule = (Vec<f64>, Vec<f64>);

fn refine_panel<F>(
    f: &F,
    panel: Panel,
    depth: usize,
    spec: &QuadratureSpec,
    coarse: &Rule,
    fine: &Rule,
    unresolved: &mut f64,
) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    let low = tensor_product(f, panel, coarse);
    let high = tensor_product(f, panel, fine);
    let err = (low - high).abs();
    if err <= spec.rel_tol * high.abs() {
        return high;
    }
    if depth >= spec.max_subdivisions {
        *unresolved += err;
        return high;
    }
    let um = 0.5 * (panel.u0 + panel.u1);
    let vm = 0.5 * (panel.v0 + panel.v1);
    let children = [
        Panel { u0: panel.u0, u1: um, v0: panel.v0, v1: vm },
        Panel { u0: panel.u0, u1: um, v0: vm, v1: panel.v1 },
        Panel { u0: um, u1: panel.u1, v0: panel.v0, v1: vm },
        Panel { u0: um, u1: panel.u1, v0: vm, v1: panel.v1 },
    ];
    let mut sum = 0.0;
    for child in children {
        sum += refine_panel(f, child, depth + 1, spec, coarse, fine, unresolved);
    }
    sum
}

/// Tensor-product Gauss-Legendre over one panel.
fn tensor_product<F>(f: &F, panel: Panel, rule: &Rule) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    let (nodes, weights) = rule;
    let uc = 0.5 * (panel.u0 + panel.u1);
    let us = 0.5 * (panel.u1 - panel.u0);
    let vc = 0.5 * (panel.v0 + panel.v1);
    let vs = 0.5 * (panel.v1 - panel.v0);
    let mut sum = 0.0;
    for (ui, wu) in nodes.iter().zip(weights) {
        let u = uc + us * ui;
        let mut row = 0.0;
        for (vi, wv) in nodes.iter().zip(weights) {
            let v = vc + vs * vi;
            row += wv * f(u, v);
        }
        sum += wu * row;
    }
    sum * us * vs
}

/// Geometry factor for one component via the reduced 2-D integral with
/// adaptive panel refinement.
pub fn integrate_reduced(
    layout: &Layout,
    component: Component,
    spec: &QuadratureSpec,
) -> Result<GeometryFactor> {
    let reduced = reduce_to_2d(layout);
    let value = reduced.integrate(|u, v| component.kernel_raw(u, v), spec)?;
    Ok(GeometryFactor { value })
}

/// Single fixed-order pass over the four reduced panels, without adaptivity
/// or error control. Diagnostic path for convergence studies.
pub fn integrate_reduced_fixed_order(
    layout: &Layout,
    component: Component,
    order: usize,
) -> Result<GeometryFactor> {
    let reduced = reduce_to_2d(layout);
    let rule = gauss_legendre_rule(order)?;
    let f = |u: f64, v: f64| reduced.weight(u, v) * component.kernel_raw(u, v);
    let mut total = 0.0;
    for panel in reduced.panels() {
        total += tensor_product(&f, panel, &rule);
    }
    Ok(GeometryFactor {
        value: total * reduced.normalization(),
    })
}

/// Geometry factor for one component by tensor Gauss-Legendre over the
/// fourfold integral as literally written (cost grows as `order^4`; meant
/// for cross-checks at modest order).
pub fn integrate_4d(
    layout: &Layout,
    component: Component,
    spec: &QuadratureSpec,
) -> Result<GeometryFactor> {
    if spec.order < 2 {
        return Err(Error::Argument(format!(
            "quadrature order must be >= 2, got {}",
            spec.order
        )));
    }
    let section = layout.section();
    let (a, b) = (section.a(), section.b());
    let (d, h) = (layout.d(), layout.h());
    let (nodes, weights) = gauss_legendre_rule(spec.order)?;
    let n = nodes.len();

    // Map [-1, 1] onto [0, 2a] for x1, x2 and [-b, b] for y1, y2.
    let xs: Vec<f64> = nodes.iter().map(|t| a + a * t).collect();
    let ys: Vec<f64> = nodes.iter().map(|t| b * t).collect();

    let mut sum = 0.0;
    for i1 in 0..n {
        for i2 in 0..n {
            let l = d + xs[i2] - xs[i1];
            let wx = weights[i1] * weights[i2];
            let mut inner = 0.0;
            for j1 in 0..n {
                for j2 in 0..n {
                    let m = h + ys[j2] - ys[j1];
                    inner += weights[j1] * weights[j2] * component.kernel_raw(l, m);
                }
            }
            sum += wx * inner;
        }
    }
    // Jacobian a^2 b^2 from the four interval maps, then 1/(4ab)^2.
    let area = 4.0 * a * b;
    Ok(GeometryFactor {
        value: sum * (a * a * b * b) / (area * area),
    })
}
