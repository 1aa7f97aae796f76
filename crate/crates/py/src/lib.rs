//! Python bindings. Every function returns the same `coring-lab/1` JSON
//! report the command line tool prints, as a string.

use pyo3::prelude::*;
use serde_json::Value;

use coring_lab::examples::INSTANCE_IDS;
use coring_lab::report::{self, InstanceParams};
use coring_lab::Result;

fn finish(command: &str, r: Result<Value>) -> String {
    let v = r.unwrap_or_else(|e| report::error_report(command, &e));
    serde_json::to_string_pretty(&v).expect("serializable")
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| coring_lab::Error::Schema { pointer: String::new(), message: format!("invalid JSON: {e}") })
}

fn params(n: Option<usize>, field: Option<String>, omega: Option<String>, alpha: Option<String>, beta: Option<String>) -> InstanceParams {
    InstanceParams { n, field, omega, alpha, beta }
}

/// Instance ids accepted by `demo`.
#[pyfunction]
fn instances() -> Vec<&'static str> {
    INSTANCE_IDS.to_vec()
}

#[pyfunction]
#[pyo3(signature = (ids, n=None, field=None, omega=None, alpha=None, beta=None))]
fn demo(
    py: Python<'_>,
    ids: Vec<String>,
    n: Option<usize>,
    field: Option<String>,
    omega: Option<String>,
    alpha: Option<String>,
    beta: Option<String>,
) -> String {
    let p = params(n, field, omega, alpha, beta);
    py.detach(|| {
        let r = ids.iter().try_for_each(|id| report::validate_instance(id)).and_then(|_| report::demo(&ids, &p));
        finish("demo", r)
    })
}

/// Correspondence on the aomega family.
#[pyfunction]
#[pyo3(signature = (n=None, field=None, omega=None, alpha=None, beta=None))]
fn correspondence(
    py: Python<'_>,
    n: Option<usize>,
    field: Option<String>,
    omega: Option<String>,
    alpha: Option<String>,
    beta: Option<String>,
) -> String {
    let p = params(n, field, omega, alpha, beta);
    py.detach(|| finish("correspondence", report::correspondence_aomega(&p)))
}

/// Correspondence on a user instance given as a JSON document.
#[pyfunction]
fn correspondence_input(py: Python<'_>, document: String) -> String {
    py.detach(|| finish("correspondence", parse_json(&document).and_then(|d| report::correspondence_input(&d))))
}

#[pyfunction]
fn classify(py: Python<'_>, n: usize) -> String {
    py.detach(|| finish("classify", report::classify(n)))
}

#[pyfunction]
fn check(py: Python<'_>, document: String) -> String {
    py.detach(|| finish("check", parse_json(&document).and_then(|d| report::check_input(&d))))
}

/// Text rendering of a JSON report.
#[pyfunction]
fn render_text(report_json: String) -> PyResult<String> {
    let v: Value = serde_json::from_str(&report_json).map_err(|e| pyo3::exceptions::PyValueError::new_err(e.to_string()))?;
    Ok(report::render_text(&v))
}

#[pymodule]
#[pyo3(name = "coring_lab")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SCHEMA", report::SCHEMA)?;
    m.add_function(wrap_pyfunction!(instances, m)?)?;
    m.add_function(wrap_pyfunction!(demo, m)?)?;
    m.add_function(wrap_pyfunction!(correspondence, m)?)?;
    m.add_function(wrap_pyfunction!(correspondence_input, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(render_text, m)?)?;
    Ok(())
}
