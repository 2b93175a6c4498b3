//! Python module `pycoxkit`: thin wrappers over the coxkit library.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use coxkit::cli::parse::{parse_elements, parse_roots};
use coxkit::coxeter::parse_system;
use coxkit::locpar::{finite_type_recognize, lp_closure};
use coxkit::refsub::canonical_generators as canonical;
use coxkit::scenarios::{verify_example_3_3, verify_example_4_5, verify_remark_g2, ScenarioOptions};
use coxkit::{CoxeterSystem, Error, Label};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Parse(_) | Error::UnknownGenerator(_) | Error::InvalidMatrix(_) | Error::InvalidParameter(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn system(dsl: &str) -> PyResult<CoxeterSystem> {
    parse_system(dsl).map_err(to_py)
}

/// Type of a Coxeter graph and its order (`None` when infinite).
#[pyfunction]
fn classify(dsl: &str) -> PyResult<(String, Option<String>)> {
    let t = finite_type_recognize(&system(dsl)?.graph());
    let order = if t.is_finite() { t.order().map(|o| o.to_string()) } else { None };
    Ok((t.label(), order))
}

/// Canonical simple roots of the reflection subgroup generated by `roots` ("a; a+b").
#[pyfunction]
fn canonical_generators(dsl: &str, roots: &str) -> PyResult<Vec<String>> {
    let sys = system(dsl)?;
    let roots = parse_roots(&sys, roots).map_err(to_py)?;
    Ok(canonical(&sys, &roots).map_err(to_py)?.iter().map(|r| r.display(&sys)).collect())
}

/// Parabolic closure of words ("a b; c") as `(w, generators)`.
#[pyfunction]
fn closure(dsl: &str, elements: &str) -> PyResult<(String, Vec<String>)> {
    let sys = system(dsl)?;
    let xs = parse_elements(&sys, elements).map_err(to_py)?;
    let c = lp_closure(&sys, &xs).map_err(to_py)?;
    Ok((c.descriptor.w().display(), sys.names_of(c.descriptor.subset())))
}

/// Runs a scenario (`ex33`, `ex45`, `g2`); returns `(passed, [(description, passed)])`.
#[pyfunction]
#[pyo3(signature = (scenario, max_i = 5, m = "4"))]
fn verify(scenario: &str, max_i: usize, m: &str) -> PyResult<(bool, Vec<(String, bool)>)> {
    let opts = ScenarioOptions::default();
    let r = match scenario {
        "ex33" => verify_example_3_3(max_i, &opts),
        "ex45" => {
            let m: Label = m.parse().map_err(|_| PyValueError::new_err(format!("bad label `{m}`")))?;
            verify_example_4_5(m, max_i, &opts)
        }
        "g2" => verify_remark_g2(),
        other => return Err(PyValueError::new_err(format!("unknown scenario `{other}`"))),
    }
    .map_err(to_py)?;
    let items = r.assertions.iter().map(|a| (a.description.clone(), a.passed)).collect();
    Ok((r.passed(), items))
}

/// The command line, in process: `run(["classify", "--inline", ...])` gives `(code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let out = coxkit::cli::run(std::iter::once("coxkit".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn pycoxkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_generators, m)?)?;
    m.add_function(wrap_pyfunction!(closure, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
