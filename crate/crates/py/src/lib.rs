//! Python bindings: a thin layer over the core crate. Reports come back as
//! plain dicts so the Python side needs no wrapper classes.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use milnor::corpus::{check_expected, corpus, find_entry};
use milnor::{full_report_with, parse_with_vars, InvariantReport, Threshold};

fn report_to_dict<'py>(py: Python<'py>, r: &InvariantReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("d", r.d)?;
    d.set_item("n", r.n)?;
    d.set_item("T", r.big_t)?;
    d.set_item("tau", r.tau)?;
    match r.ct {
        Threshold::Finite(v) => d.set_item("ct", v)?,
        Threshold::Infinite => d.set_item("ct", "infinite")?,
    }
    d.set_item("st", r.st)?;
    d.set_item("sat", r.sat)?;
    d.set_item("free", r.free)?;
    d.set_item("reg", r.reg)?;
    d.set_item("series", r.series.clone())?;
    d.set_item("numerator_Q", r.numerator_q.clone())?;
    d.set_item("krull_dim", r.krull_dim)?;
    Ok(d)
}

/// Compute the invariant report of a homogeneous polynomial given as text.
#[pyfunction]
#[pyo3(signature = (poly, vars, max_degree=None))]
fn compute<'py>(
    py: Python<'py>,
    poly: &str,
    vars: Vec<String>,
    max_degree: Option<u32>,
) -> PyResult<Bound<'py, PyDict>> {
    let f = parse_with_vars(poly, &vars).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let report =
        full_report_with(&f, max_degree).map_err(|e| PyValueError::new_err(e.to_string()))?;
    report_to_dict(py, &report)
}

/// Leading coefficients (length T+1) of the Hilbert series of the Milnor
/// algebra of a smooth hypersurface of degree d in P^n.
#[pyfunction]
fn smooth_series(n: usize, d: u32) -> PyResult<Vec<u64>> {
    if n == 0 || d < 2 {
        return Err(PyValueError::new_err("need n >= 1 and d >= 2"));
    }
    let s = milnor::smooth_series(n, d);
    Ok(s.coeffs_u64())
}

/// Names of the built-in examples.
#[pyfunction]
fn example_names() -> Vec<String> {
    corpus().into_iter().map(|e| e.name).collect()
}

/// Run one built-in example; returns (report dict, list of mismatch strings).
#[pyfunction]
fn run_example<'py>(
    py: Python<'py>,
    name: &str,
) -> PyResult<(Bound<'py, PyDict>, Vec<String>)> {
    let entry = find_entry(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown example {name:?}")))?;
    let f = parse_with_vars(&entry.polynomial, &entry.variables)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let report =
        full_report_with(&f, None).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let mismatches = check_expected(&report, &entry.expected);
    Ok((report_to_dict(py, &report)?, mismatches))
}

#[pymodule]
fn milnor_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(smooth_series, m)?)?;
    m.add_function(wrap_pyfunction!(example_names, m)?)?;
    m.add_function(wrap_pyfunction!(run_example, m)?)?;
    Ok(())
}
