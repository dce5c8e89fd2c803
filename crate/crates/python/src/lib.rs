//! Python bindings. Structured results come back as JSON strings that
//! mirror the CLI report payloads.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use mwsplit::verify::{self, Bounds, Scope};
use mwsplit::{chow_witt, flag, motive, tableau, Grassmannian, Twist};

fn twist(twisted: bool) -> Twist {
    if twisted {
        Twist::Twisted
    } else {
        Twist::Untwisted
    }
}

fn value_error(e: mwsplit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyfunction]
fn version() -> &'static str {
    mwsplit::VERSION
}

/// `(shape, irredundant, full, even)`.
type Row = (Vec<usize>, bool, bool, bool);

/// One row per tableau of `Gr(k,n)`.
#[pyfunction]
#[pyo3(signature = (k, n, twisted = false))]
fn tableaux(k: usize, n: usize, twisted: bool) -> PyResult<Vec<Row>> {
    let g = Grassmannian::new(k, n).map_err(value_error)?;
    let mut out = Vec::new();
    for t in g.tableaux(twist(twisted)).into_iter().flatten() {
        let c = tableau::classify(&t, g.truncation()).map_err(value_error)?;
        out.push((t.shape.rows().to_vec(), c.irredundant, c.full, c.even));
    }
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (k, n, twisted = false))]
fn even_tableaux(k: usize, n: usize, twisted: bool) -> PyResult<Vec<Vec<usize>>> {
    let tr = Grassmannian::new(k, n).map_err(value_error)?.truncation();
    let even = tableau::even_tableaux(tr, twist(twisted), None).map_err(value_error)?;
    Ok(even.into_values().flatten().map(|s| s.rows().to_vec()).collect())
}

#[pyfunction]
#[pyo3(signature = (k, n, twisted = false))]
fn decompose(k: usize, n: usize, twisted: bool) -> PyResult<String> {
    let d = motive::decompose_grassmannian(k, n, twist(twisted)).map_err(value_error)?;
    Ok(d.to_json().to_string())
}

#[pyfunction]
fn flag_motive(n: usize) -> PyResult<String> {
    Ok(motive::flag_motive(n).map_err(value_error)?.to_json().to_string())
}

#[pyfunction]
#[pyo3(signature = (k, n, twisted = false))]
fn chow_witt_basis(k: usize, n: usize, twisted: bool) -> PyResult<String> {
    Ok(chow_witt::chow_witt_basis(k, n, twist(twisted)).map_err(value_error)?.to_json().to_string())
}

#[pyfunction]
fn e_flag_dims(n: usize) -> Vec<usize> {
    flag::e_flag_dims(n)
}

/// Runs the invariant suites; returns `(passed, report_json)`.
#[pyfunction]
#[pyo3(signature = (scope = "all", max_n = 8, max_degree = 10))]
fn run_verify(py: Python<'_>, scope: &str, max_n: usize, max_degree: usize) -> PyResult<(bool, String)> {
    let scope: Scope = scope.parse().map_err(value_error)?;
    let bounds = Bounds { max_n, max_degree, ..Bounds::default() };
    let report = py.detach(|| verify::run(scope, bounds));
    let json = serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((report.passed(), json))
}

#[pymodule]
fn mwsplit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(version, m)?)?;
    m.add_function(wrap_pyfunction!(tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(even_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(flag_motive, m)?)?;
    m.add_function(wrap_pyfunction!(chow_witt_basis, m)?)?;
    m.add_function(wrap_pyfunction!(e_flag_dims, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrappers_without_interpreter() {
        assert_eq!(even_tableaux(2, 4, false).unwrap(), vec![vec![], vec![2, 2]]);
        assert_eq!(tableaux(2, 4, true).unwrap().len(), 6);
        assert_eq!(e_flag_dims(4), vec![1, 0, 0, 2, 0, 0, 1]);
        assert!(decompose(2, 4, false).unwrap().contains("eta_cone"));
    }
}
