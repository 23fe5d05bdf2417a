//! Python bindings: the scalar force functions, geometry factors, the
//! filament cross-check, and vectorized time-series evaluation.
//!
//! Build with `cargo build -p busbar-forces-py --release` and import the
//! produced cdylib as `busbar_forces` (see `python/smoke_test.py`).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use busbar_forces::forces::{self, CurrentSeries, Method, MethodSpec};
use busbar_forces::kernels::Component;
use busbar_forces::model::{
    validate_adjacent, validate_non_adjacent, CrossSection, CurrentPair, Layout,
};
use busbar_forces::Error;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Convergence { .. } => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn method_spec(
    method: &str,
    order: Option<usize>,
    filament_n: Option<usize>,
    rel_tol: Option<f64>,
) -> PyResult<MethodSpec> {
    let method = match method {
        "closed-form" => Method::ClosedForm,
        "reduced-quadrature" => Method::ReducedQuadrature,
        "direct-4d" => Method::Direct4D,
        "filament" => Method::Filament,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown method '{other}'; expected closed-form, reduced-quadrature, direct-4d, or filament"
            )))
        }
    };
    let mut spec = MethodSpec {
        method,
        ..Default::default()
    };
    if let Some(order) = order {
        spec.quadrature.order = order;
    }
    if let Some(n) = filament_n {
        spec.filament_n = n;
    }
    if let Some(rel_tol) = rel_tol {
        spec.quadrature.rel_tol = rel_tol;
    }
    Ok(spec)
}

fn layout(a: f64, b: f64, d: f64, h: Option<f64>) -> PyResult<Layout> {
    let section = CrossSection::new(a, b).map_err(to_py_err)?;
    match h {
        None => Ok(Layout::from(
            validate_adjacent(section, d).map_err(to_py_err)?,
        )),
        Some(h) => Ok(Layout::from(
            validate_non_adjacent(section, d, h).map_err(to_py_err)?,
        )),
    }
}

fn component(name: &str) -> PyResult<Component> {
    match name {
        "x" => Ok(Component::X),
        "y" => Ok(Component::Y),
        other => Err(PyValueError::new_err(format!(
            "unknown component '{other}'; expected 'x' or 'y'"
        ))),
    }
}

/// x force per unit length (N/m) between adjacent conductors.
#[pyfunction]
#[pyo3(signature = (a, b, d, i1, i2, method="closed-form", order=None, filament_n=None, rel_tol=None))]
#[allow(clippy::too_many_arguments)]
fn adjacent_fx(
    a: f64,
    b: f64,
    d: f64,
    i1: f64,
    i2: f64,
    method: &str,
    order: Option<usize>,
    filament_n: Option<usize>,
    rel_tol: Option<f64>,
) -> PyResult<f64> {
    let spec = method_spec(method, order, filament_n, rel_tol)?;
    forces::adjacent_fx(a, b, d, i1, i2, &spec).map_err(to_py_err)
}

/// x force per unit length (N/m) between non-adjacent conductors.
#[pyfunction]
#[pyo3(signature = (a, b, d, h, i1, i2, method="closed-form", order=None, filament_n=None, rel_tol=None))]
#[allow(clippy::too_many_arguments)]
fn non_adjacent_fx(
    a: f64,
    b: f64,
    d: f64,
    h: f64,
    i1: f64,
    i2: f64,
    method: &str,
    order: Option<usize>,
    filament_n: Option<usize>,
    rel_tol: Option<f64>,
) -> PyResult<f64> {
    let spec = method_spec(method, order, filament_n, rel_tol)?;
    forces::non_adjacent_fx(a, b, d, h, i1, i2, &spec).map_err(to_py_err)
}

/// y force per unit length (N/m) between non-adjacent conductors.
#[pyfunction]
#[pyo3(signature = (a, b, d, h, i1, i2, method="closed-form", order=None, filament_n=None, rel_tol=None))]
#[allow(clippy::too_many_arguments)]
fn non_adjacent_fy(
    a: f64,
    b: f64,
    d: f64,
    h: f64,
    i1: f64,
    i2: f64,
    method: &str,
    order: Option<usize>,
    filament_n: Option<usize>,
    rel_tol: Option<f64>,
) -> PyResult<f64> {
    let spec = method_spec(method, order, filament_n, rel_tol)?;
    forces::non_adjacent_fy(a, b, d, h, i1, i2, &spec).map_err(to_py_err)
}

/// Current-independent geometry factor G (1/m) of one component, with
/// `F = mu0/(2 pi) * i1 * i2 * G`. `h=None` selects the adjacent layout.
#[pyfunction]
#[pyo3(signature = (a, b, d, h=None, component="x", method="closed-form", order=None, filament_n=None, rel_tol=None))]
#[allow(clippy::too_many_arguments)]
fn geometry_factor(
    a: f64,
    b: f64,
    d: f64,
    h: Option<f64>,
    component: &str,
    method: &str,
    order: Option<usize>,
    filament_n: Option<usize>,
    rel_tol: Option<f64>,
) -> PyResult<f64> {
    let layout = layout(a, b, d, h)?;
    let spec = method_spec(method, order, filament_n, rel_tol)?;
    let comp = self::component(component)?;
    Ok(forces::geometry_factor(&layout, comp, &spec)
        .map_err(to_py_err)?
        .value)
}

/// Both force components (N/m) from the filament discretization with an
/// `nx x ny` grid per conductor.
#[pyfunction]
#[pyo3(signature = (a, b, d, h, i1, i2, nx=256, ny=256))]
#[allow(clippy::too_many_arguments)]
fn filament_force(
    a: f64,
    b: f64,
    d: f64,
    h: Option<f64>,
    i1: f64,
    i2: f64,
    nx: usize,
    ny: usize,
) -> PyResult<(f64, f64)> {
    let layout = layout(a, b, d, h)?;
    let currents = CurrentPair::new(i1, i2).map_err(to_py_err)?;
    let force =
        busbar_forces::filament::filament_force(&layout, currents, nx, ny).map_err(to_py_err)?;
    Ok((force.fx, force.fy))
}

/// Force series (list of `(fx, fy)` in N/m) for paired current samples;
/// the geometry factor is computed once per component, not per sample.
#[pyfunction]
#[pyo3(signature = (a, b, d, i1, i2, h=None, method="closed-form", order=None, filament_n=None, rel_tol=None))]
#[allow(clippy::too_many_arguments)]
fn force_series(
    a: f64,
    b: f64,
    d: f64,
    i1: Vec<f64>,
    i2: Vec<f64>,
    h: Option<f64>,
    method: &str,
    order: Option<usize>,
    filament_n: Option<usize>,
    rel_tol: Option<f64>,
) -> PyResult<Vec<(f64, f64)>> {
    if i1.len() != i2.len() {
        return Err(PyValueError::new_err(format!(
            "current arrays differ in length: {} vs {}",
            i1.len(),
            i2.len()
        )));
    }
    let layout = layout(a, b, d, h)?;
    let spec = method_spec(method, order, filament_n, rel_tol)?;
    let series =
        CurrentSeries::new(i1.into_iter().zip(i2).collect()).map_err(to_py_err)?;
    let components: &[Component] = if h.is_some() {
        &[Component::X, Component::Y]
    } else {
        &[Component::X]
    };
    let out = forces::force_series(&layout, &series, components, &spec).map_err(to_py_err)?;
    Ok(out.into_iter().map(|f| (f.fx, f.fy)).collect())
}

/// Vacuum permeability (N/A^2).
#[pyfunction]
fn mu_0() -> f64 {
    busbar_forces::MU_0
}

#[pymodule]
#[pyo3(name = "busbar_forces")]
fn bindings(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(adjacent_fx, m)?)?;
    m.add_function(wrap_pyfunction!(non_adjacent_fx, m)?)?;
    m.add_function(wrap_pyfunction!(non_adjacent_fy, m)?)?;
    m.add_function(wrap_pyfunction!(geometry_factor, m)?)?;
    m.add_function(wrap_pyfunction!(filament_force, m)?)?;
    m.add_function(wrap_pyfunction!(force_series, m)?)?;
    m.add_function(wrap_pyfunction!(mu_0, m)?)?;
    m.add("MU_0", busbar_forces::MU_0)?;
    Ok(())
}
