//! Public force API: scalar evaluations for both layouts and vectorized
//! time-series evaluation.
//!
//! Force is bilinear in the currents, so every method reduces to a
//! current-independent geometry factor `G` with
//! `F = mu0/(2 pi) * i1 * i2 * G`. Time-series evaluation computes `G` once
//! per component and scales it sample by sample; no per-instant
//! recomputation happens, and the per-sample arithmetic is identical to the
//! scalar path.

use crate::closedform::stencil_geometry_factor;
use crate::filament::filament_geometry_factor;
use crate::kernels::Component;
use crate::model::{
    validate_adjacent, validate_non_adjacent, CrossSection, CurrentPair, ForcePerLength, Layout,
};
use crate::quadrature::{integrate_4d, integrate_reduced, GeometryFactor, QuadratureSpec};
use crate::{Error, Result, MU0_OVER_2PI};

/// Evaluation path for the geometry factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// 9-point corner stencil of the analytical primitive (fast, exact up
    /// to rounding).
    #[default]
    ClosedForm,
    /// Adaptive Gauss-Legendre on the exact 2-D reduction.
    ReducedQuadrature,
    /// Tensor Gauss-Legendre on the fourfold integral as written.
    Direct4D,
    /// Midpoint filament discretization (independent cross-check).
    Filament,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::ReducedQuadrature => "reduced-quadrature",
            Method::Direct4D => "direct-4d",
            Method::Filament => "filament",
        }
    }
}

/// A method together with its numeric parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodSpec {
    pub method: Method,
    /// Used by the quadrature methods.
    pub quadrature: QuadratureSpec,
    /// Grid subdivisions per direction for the filament method.
    pub filament_n: usize,
}

impl Default for MethodSpec {
    fn default() -> Self {
        Self {
            method: Method::ClosedForm,
            quadrature: QuadratureSpec::default(),
            filament_n: 256,
        }
    }
}

impl MethodSpec {
    pub fn closed_form() -> Self {
        Self::default()
    }

    pub fn reduced_quadrature(spec: QuadratureSpec) -> Self {
        Self {
            method: Method::ReducedQuadrature,
            quadrature: spec,
            ..Self::default()
        }
    }

    pub fn direct_4d(spec: QuadratureSpec) -> Self {
        Self {
            method: Method::Direct4D,
            quadrature: spec,
            ..Self::default()
        }
    }

    pub fn filament(n: usize) -> Self {
        Self {
            method: Method::Filament,
            filament_n: n,
            ..Self::default()
        }
    }

    /// Compact descriptor for output metadata, stable across runs.
    pub fn describe(&self) -> String {
        match self.method {
            Method::ClosedForm => "closed-form".into(),
            Method::ReducedQuadrature => format!(
                "reduced-quadrature(order={},max_subdivisions={},rel_tol={:e})",
                self.quadrature.order, self.quadrature.max_subdivisions, self.quadrature.rel_tol
            ),
            Method::Direct4D => format!("direct-4d(order={})", self.quadrature.order),
            Method::Filament => format!("filament(n={})", self.filament_n),
        }
    }
}

/// Geometry factor of one component for a validated layout, dispatched to
/// the selected method.
pub fn geometry_factor(
    layout: &Layout,
    component: Component,
    spec: &MethodSpec,
) -> Result<GeometryFactor> {
    match spec.method {
        Method::ClosedForm => stencil_geometry_factor(layout, component),
        Method::ReducedQuadrature => integrate_reduced(layout, component, &spec.quadrature),
        Method::Direct4D => integrate_4d(layout, component, &spec.quadrature),
        Method::Filament => filament_geometry_factor(layout, component, spec.filament_n),
    }
}

/// `F = mu0/(2 pi) * i1 * i2 * G`.
///
/// Single shared multiply chain: the scalar API and the time-series path
/// both go through here, so they produce bit-identical samples.
#[inline]
pub fn force_from_factor(g: GeometryFactor, i1: f64, i2: f64) -> f64 {
    MU0_OVER_2PI * (i1 * i2) * g.value
}

/// x force per unit length (N/m) between adjacent conductors; the y
/// component is identically zero for this layout.
pub fn adjacent_fx(a: f64, b: f64, d: f64, i1: f64, i2: f64, spec: &MethodSpec) -> Result<f64> {
    let section = CrossSection::new(a, b)?;
    let layout = Layout::from(validate_adjacent(section, d)?);
    let currents = CurrentPair::new(i1, i2)?;
    let g = geometry_factor(&layout, Component::X, spec)?;
    Ok(force_from_factor(g, currents.i1, currents.i2))
}

/// x force per unit length (N/m) between non-adjacent conductors.
pub fn non_adjacent_fx(
    a: f64,
    b: f64,
    d: f64,
    h: f64,
    i1: f64,
    i2: f64,
    spec: &MethodSpec,
) -> Result<f64> {
    let section = CrossSection::new(a, b)?;
    let layout = Layout::from(validate_non_adjacent(section, d, h)?);
    let currents = CurrentPair::new(i1, i2)?;
    let g = geometry_factor(&layout, Component::X, spec)?;
    Ok(force_from_factor(g, currents.i1, currents.i2))
}

/// y force per unit length (N/m) between non-adjacent conductors.
pub fn non_adjacent_fy(
    a: f64,
    b: f64,
    d: f64,
    h: f64,
    i1: f64,
    i2: f64,
    spec: &MethodSpec,
) -> Result<f64> {
    let section = CrossSection::new(a, b)?;
    let layout = Layout::from(validate_non_adjacent(section, d, h)?);
    let currents = CurrentPair::new(i1, i2)?;
    let g = geometry_factor(&layout, Component::Y, spec)?;
    Ok(force_from_factor(g, currents.i1, currents.i2))
}

/// Ordered current samples, optionally time-stamped.
#[derive(Debug, Clone, PartialEq)]
pub struct CurrentSeries {
    samples: Vec<CurrentPair>,
    timestamps: Option<Vec<f64>>,
}

impl CurrentSeries {
    /// Series from `(i1, i2)` pairs; must be non-empty with finite values.
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Domain("current series must not be empty".into()));
        }
        let samples = samples
            .into_iter()
            .map(|(i1, i2)| CurrentPair::new(i1, i2))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            samples,
            timestamps: None,
        })
    }

    /// Attach timestamps (s); the lengths must match.
    pub fn with_timestamps(mut self, timestamps: Vec<f64>) -> Result<Self> {
        if timestamps.len() != self.samples.len() {
            return Err(Error::Domain(format!(
                "timestamp count {} does not match sample count {}",
                timestamps.len(),
                self.samples.len()
            )));
        }
        if timestamps.iter().any(|t| !t.is_finite()) {
            return Err(Error::Domain("timestamps must be finite".into()));
        }
        self.timestamps = Some(timestamps);
        Ok(self)
    }

    pub fn samples(&self) -> &[CurrentPair] {
        &self.samples
    }

    pub fn timestamps(&self) -> Option<&[f64]> {
        self.timestamps.as_deref()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Force series for every sample: the geometry factor of each requested
/// component is computed once and scaled elementwise.
///
/// Components not in `components` are reported as zero.
pub fn force_series(
    layout: &Layout,
    series: &CurrentSeries,
    components: &[Component],
    spec: &MethodSpec,
) -> Result<Vec<ForcePerLength>> {
    let zero = GeometryFactor { value: 0.0 };
    let mut gx = None;
    let mut gy = None;
    for component in components {
        match component {
            Component::X if gx.is_none() => gx = Some(geometry_factor(layout, Component::X, spec)?),
            Component::Y if gy.is_none() => gy = Some(geometry_factor(layout, Component::Y, spec)?),
            _ => {}
        }
    }
    let gx = gx.unwrap_or(zero);
    let gy = gy.unwrap_or(zero);
    Ok(series
        .samples()
        .iter()
        .map(|pair| ForcePerLength {
            fx: force_from_factor(gx, pair.i1, pair.i2),
            fy: force_from_factor(gy, pair.i1, pair.i2),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::linspace;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    // Frozen oracle values: reduced quadrature at rel_tol = 1e-12 on the
    // reference geometry a = 0.005, b = 0.05, dumped at full precision by
    // examples/oracle_values.rs.
    #[allow(clippy::excessive_precision)]
    const V1_ADJACENT_D011: f64 = 4.90313971896062683e-6;
    #[allow(clippy::excessive_precision)]
    const V2_NON_ADJACENT_FX: f64 = 3.44274394097352517e-7;
    #[allow(clippy::excessive_precision)]
    const V3_NON_ADJACENT_FY: f64 = 2.14291878180845451e-6;

    fn quad_spec() -> MethodSpec {
        MethodSpec::reduced_quadrature(QuadratureSpec {
            rel_tol: 1e-12,
            ..Default::default()
        })
    }

    #[test]
    fn golden_adjacent_force() {
        let f = adjacent_fx(0.005, 0.05, 0.011, 1.0, 1.0, &quad_spec()).unwrap();
        assert_relative_eq!(f, V1_ADJACENT_D011, max_relative = 1e-11);
        // The closed form agrees at its cross-method tolerance.
        let cf = adjacent_fx(0.005, 0.05, 0.011, 1.0, 1.0, &MethodSpec::closed_form()).unwrap();
        assert_relative_eq!(cf, V1_ADJACENT_D011, max_relative = 1e-7);
    }

    #[test]
    fn golden_non_adjacent_forces() {
        let fx = non_adjacent_fx(0.005, 0.05, 0.011, 0.11, 1.0, 1.0, &quad_spec()).unwrap();
        let fy = non_adjacent_fy(0.005, 0.05, 0.011, 0.11, 1.0, 1.0, &quad_spec()).unwrap();
        assert_relative_eq!(fx, V2_NON_ADJACENT_FX, max_relative = 1e-11);
        assert_relative_eq!(fy, V3_NON_ADJACENT_FY, max_relative = 1e-11);
        let cfx =
            non_adjacent_fx(0.005, 0.05, 0.011, 0.11, 1.0, 1.0, &MethodSpec::closed_form()).unwrap();
        let cfy =
            non_adjacent_fy(0.005, 0.05, 0.011, 0.11, 1.0, 1.0, &MethodSpec::closed_form()).unwrap();
        assert_relative_eq!(cfx, V2_NON_ADJACENT_FX, max_relative = 1e-7);
        assert_relative_eq!(cfy, V3_NON_ADJACENT_FY, max_relative = 1e-7);
    }

    #[test]
    fn zero_current_is_zero_force() {
        for d in [0.011, 0.05, 0.3] {
            let f = adjacent_fx(0.005, 0.05, d, 0.0, 5.0, &MethodSpec::closed_form()).unwrap();
            assert_eq!(f, 0.0);
        }
    }

    #[test]
    fn thin_wire_limit_adjacent() {
        // Far apart, the massive pair approaches mu0 i1 i2 / (2 pi d).
        // With a square 0.005 section at d = 1 the finite-size correction
        // is ~(2a)^2/(6 d^2) = 1.7e-5.
        let f = adjacent_fx(0.005, 0.005, 1.0, 1.0, 1.0, &MethodSpec::closed_form()).unwrap();
        assert_relative_eq!(f, 2.0e-7, max_relative = 1e-3);
        // The tall 0.05 section carries a larger second-order correction,
        // -(2b)^2/(6 d^2) = -1.67e-3, which the evaluation reproduces.
        let tall = adjacent_fx(0.005, 0.05, 1.0, 1.0, 1.0, &MethodSpec::closed_form()).unwrap();
        assert_relative_eq!(tall, 2.0e-7, max_relative = 2e-3);
        assert_relative_eq!(tall, 2.0e-7 * (1.0 - 0.01 / 6.0), max_relative = 1e-4);
    }

    #[test]
    fn thin_wire_limit_tall_offset() {
        let d = 0.011;
        let h = 10.0;
        let f =
            non_adjacent_fx(0.005, 0.05, d, h, 1.0, 1.0, &MethodSpec::closed_form()).unwrap();
        let expected = MU0_OVER_2PI * d / (d * d + h * h);
        assert_relative_eq!(f, expected, max_relative = 1e-3);
    }

    #[test]
    fn current_order_is_irrelevant() {
        let spec = MethodSpec::closed_form();
        let f12 = non_adjacent_fx(0.005, 0.05, 0.011, 0.11, 2.0, 7.0, &spec).unwrap();
        let f21 = non_adjacent_fx(0.005, 0.05, 0.011, 0.11, 7.0, 2.0, &spec).unwrap();
        assert_eq!(f12, f21);
    }

    #[test]
    fn opposite_currents_flip_the_sign() {
        let spec = MethodSpec::closed_form();
        let same = non_adjacent_fy(0.005, 0.05, 0.011, 0.11, 3.0, 3.0, &spec).unwrap();
        let opposite = non_adjacent_fy(0.005, 0.05, 0.011, 0.11, 3.0, -3.0, &spec).unwrap();
        assert_eq!(opposite, -same);
        assert!(same > 0.0);
    }

    #[test]
    fn diagonal_symmetry_square_section() {
        let spec = MethodSpec::closed_form();
        let fx = non_adjacent_fx(0.01, 0.01, 0.05, 0.05, 1.0, 1.0, &spec).unwrap();
        let fy = non_adjacent_fy(0.01, 0.01, 0.05, 0.05, 1.0, 1.0, &spec).unwrap();
        assert_relative_eq!(fx, fy, max_relative = 1e-12);
    }

    #[test]
    fn all_methods_agree() {
        let specs = [
            MethodSpec::closed_form(),
            MethodSpec::reduced_quadrature(QuadratureSpec::default()),
            MethodSpec::direct_4d(QuadratureSpec::default()),
            MethodSpec::filament(128),
        ];
        let reference = adjacent_fx(0.005, 0.05, 0.05, 1.0, 1.0, &specs[0]).unwrap();
        for spec in &specs[1..] {
            let f = adjacent_fx(0.005, 0.05, 0.05, 1.0, 1.0, spec).unwrap();
            assert_relative_eq!(f, reference, max_relative = 1e-3);
        }
    }

    #[test]
    fn series_scales_bilinearly() {
        let section = CrossSection::new(0.005, 0.05).unwrap();
        let layout = Layout::from(validate_adjacent(section, 0.02).unwrap());
        let series = CurrentSeries::new(vec![(1.0, 3.0), (2.0, 4.0)]).unwrap();
        let spec = MethodSpec::closed_form();
        let out = force_series(&layout, &series, &[Component::X], &spec).unwrap();
        let g = geometry_factor(&layout, Component::X, &spec).unwrap();
        assert_eq!(out[0].fx, force_from_factor(g, 1.0, 3.0));
        assert_eq!(out[1].fx, force_from_factor(g, 2.0, 4.0));
        assert_eq!(out[0].fy, 0.0);
    }

    #[test]
    fn series_path_equals_per_sample_scalar_calls() {
        let spec = MethodSpec::closed_form();
        let section = CrossSection::new(0.005, 0.05).unwrap();
        let layout = Layout::from(validate_adjacent(section, 0.02).unwrap());
        let pairs: Vec<(f64, f64)> = (0..50)
            .map(|k| {
                let t = k as f64 / 50.0;
                ((2.0 * t).sin(), (3.0 * t + 0.5).cos())
            })
            .collect();
        let series = CurrentSeries::new(pairs.clone()).unwrap();
        let out = force_series(&layout, &series, &[Component::X], &spec).unwrap();
        for (sample, (i1, i2)) in out.iter().zip(&pairs) {
            let scalar = adjacent_fx(0.005, 0.05, 0.02, *i1, *i2, &spec).unwrap();
            assert_eq!(sample.fx, scalar);
        }
    }

    #[test]
    fn singleton_series_equals_scalar_operation() {
        let spec = MethodSpec::closed_form();
        let section = CrossSection::new(0.005, 0.05).unwrap();
        let layout = Layout::from(validate_non_adjacent(section, 0.011, 0.11).unwrap());
        let series = CurrentSeries::new(vec![(2.5, -1.5)]).unwrap();
        let out = force_series(&layout, &series, &[Component::X, Component::Y], &spec).unwrap();
        assert_eq!(out.len(), 1);
        let fx = non_adjacent_fx(0.005, 0.05, 0.011, 0.11, 2.5, -1.5, &spec).unwrap();
        let fy = non_adjacent_fy(0.005, 0.05, 0.011, 0.11, 2.5, -1.5, &spec).unwrap();
        assert_eq!(out[0].fx, fx);
        assert_eq!(out[0].fy, fy);
    }

    #[test]
    fn sinusoidal_quadrature_currents_give_double_frequency_force() {
        // i1 = sin(wt), i2 = sin(wt + pi/2) = cos(wt), so the force is
        // (mu0 G / 4 pi) sin(2wt).
        let spec = MethodSpec::closed_form();
        let section = CrossSection::new(0.005, 0.05).unwrap();
        let layout = Layout::from(validate_adjacent(section, 0.02).unwrap());
        let g = geometry_factor(&layout, Component::X, &spec).unwrap();
        let freq = 50.0;
        let omega = 2.0 * std::f64::consts::PI * freq;
        let times = linspace(0.0, 1.0 / freq, 500);
        let pairs: Vec<(f64, f64)> = times
            .iter()
            .map(|&t| {
                (
                    (omega * t).sin(),
                    (omega * t + std::f64::consts::FRAC_PI_2).sin(),
                )
            })
            .collect();
        let series = CurrentSeries::new(pairs).unwrap().with_timestamps(times.clone()).unwrap();
        let out = force_series(&layout, &series, &[Component::X], &spec).unwrap();
        let peak = MU0_OVER_2PI * g.value / 2.0;
        for (sample, &t) in out.iter().zip(&times) {
            let expected = peak * (2.0 * omega * t).sin();
            assert!(
                (sample.fx - expected).abs() <= 1e-12 * peak.abs(),
                "t = {t}: {:.17e} vs {expected:.17e}",
                sample.fx
            );
        }
    }

    #[test]
    fn empty_series_is_rejected() {
        assert!(CurrentSeries::new(vec![]).is_err());
    }

    #[test]
    fn timestamp_length_mismatch_is_rejected() {
        let s = CurrentSeries::new(vec![(1.0, 1.0)]).unwrap();
        assert!(s.with_timestamps(vec![0.0, 1.0]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn force_is_bilinear_in_the_currents(
            i1 in -100.0f64..100.0,
            i2 in -100.0f64..100.0,
            k1 in -10.0f64..10.0,
            k2 in -10.0f64..10.0,
        ) {
            let spec = MethodSpec::closed_form();
            let f = adjacent_fx(0.005, 0.05, 0.02, i1, i2, &spec).unwrap();
            let scaled = adjacent_fx(0.005, 0.05, 0.02, k1 * i1, k2 * i2, &spec).unwrap();
            let expected = k1 * k2 * f;
            prop_assert!(
                (scaled - expected).abs() <= 1e-14 * expected.abs().max(1e-300),
                "{scaled:e} vs {expected:e}"
            );
        }
    }
}
