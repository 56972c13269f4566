//! Python bindings for `ces-orlicz`.
//!
//! Certified values come back as `(lo, hi)` tuples; a proven divergence is
//! `(inf, inf)`.

use std::collections::BTreeMap;

use ::ces_orlicz::certify::{certify_all, rotundity_witness, solve_alpha as core_solve_alpha};
use ::ces_orlicz::harness::{run_all, SuiteConfig};
use ::ces_orlicz::witness::sm_failure_witness;
use ::ces_orlicz::{
    luxemburg_norm as core_norm, modular as core_modular, parse_phi, parse_sequence, Certificate, CertifiedValue,
    Error, GeometricTail, OrliczFunction, PhiPiece, Sequence, WitnessPair,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    let msg = format!("{}: {e}", e.code());
    if e.is_input_error() {
        PyValueError::new_err(msg)
    } else {
        PyRuntimeError::new_err(msg)
    }
}

fn pair(v: CertifiedValue) -> (f64, f64) {
    (v.lo(), v.hi())
}

#[pyclass(name = "OrliczFunction", frozen, from_py_object)]
#[derive(Clone)]
struct PyOrlicz(OrliczFunction);

#[pymethods]
impl PyOrlicz {
    /// Pieces are `(start, slope, coeff, exp)` tuples.
    #[new]
    fn new(pieces: Vec<(f64, f64, f64, f64)>) -> PyResult<Self> {
        let pieces = pieces.into_iter().map(|(s, sl, c, e)| PhiPiece::new(s, sl, c, e)).collect();
        OrliczFunction::new(pieces).map(PyOrlicz).map_err(to_py)
    }

    #[staticmethod]
    fn power(coeff: f64, exp: f64) -> PyResult<Self> {
        OrliczFunction::power(coeff, exp).map(PyOrlicz).map_err(to_py)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_phi(text).map(PyOrlicz).map_err(to_py)
    }

    fn __call__(&self, u: f64) -> f64 {
        self.0.eval(u)
    }

    #[getter]
    fn a_phi(&self) -> f64 {
        self.0.a_phi()
    }

    fn sais(&self) -> Vec<(f64, f64)> {
        self.0.sai_list().iter().map(|s| (s.lo, s.hi)).collect()
    }

    fn delta2_at_zero(&self) -> PyCertificate {
        PyCertificate(self.0.delta2_at_zero())
    }

    fn lower_index(&self) -> PyCertificate {
        PyCertificate(self.0.lower_index_exceeds_one())
    }

    fn to_text(&self) -> String {
        self.0.to_spec_text()
    }

    fn __repr__(&self) -> String {
        format!("OrliczFunction({} pieces)", self.0.pieces().len())
    }
}

#[pyclass(name = "Sequence", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySequence(Sequence);

#[pymethods]
impl PySequence {
    /// Explicit head plus an optional geometric tail `(c, gamma)`.
    #[new]
    #[pyo3(signature = (head, tail=None))]
    fn new(head: Vec<f64>, tail: Option<(f64, f64)>) -> PyResult<Self> {
        Sequence::new(head, tail.map(|(c, gamma)| GeometricTail { c, gamma })).map(PySequence).map_err(to_py)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_sequence(text).map(PySequence).map_err(to_py)
    }

    #[getter]
    fn head(&self) -> Vec<f64> {
        self.0.head().to_vec()
    }

    #[getter]
    fn tail(&self) -> Option<(f64, f64)> {
        self.0.tail().map(|t| (t.c, t.gamma))
    }

    fn __getitem__(&self, i: usize) -> PyResult<f64> {
        if i == 0 {
            return Err(PyValueError::new_err("sequences are indexed from 1"));
        }
        Ok(self.0.get(i))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Sequence({})", self.0.to_inline())
    }
}

#[pyclass(name = "WitnessPair", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyWitness(WitnessPair);

#[pymethods]
impl PyWitness {
    #[getter]
    fn kind(&self) -> &'static str {
        self.0.kind.as_str()
    }

    #[getter]
    fn x(&self) -> PySequence {
        PySequence(self.0.x.clone())
    }

    #[getter]
    fn y(&self) -> PySequence {
        PySequence(self.0.y.clone())
    }

    #[getter]
    fn constants(&self) -> BTreeMap<String, f64> {
        self.0.constants.iter().cloned().collect()
    }

    fn verify(&self, phi: &PyOrlicz, tol: f64) -> bool {
        ::ces_orlicz::verify_witness(&phi.0, &self.0, tol).passed()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "Certificate", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCertificate(Certificate);

#[pymethods]
impl PyCertificate {
    #[getter]
    fn property(&self) -> &'static str {
        self.0.property.as_str()
    }

    #[getter]
    fn verdict(&self) -> &'static str {
        self.0.verdict.as_str()
    }

    #[getter]
    fn constants(&self) -> BTreeMap<String, f64> {
        self.0.constants.iter().cloned().collect()
    }

    #[getter]
    fn note(&self) -> Option<String> {
        self.0.note.clone()
    }

    #[getter]
    fn witness(&self) -> Option<PyWitness> {
        self.0.witness.clone().map(PyWitness)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyfunction]
#[pyo3(signature = (phi, x, eps=1e-8))]
fn modular(phi: &PyOrlicz, x: &PySequence, eps: f64) -> PyResult<(f64, f64)> {
    if !(eps > 0.0) {
        return Err(PyValueError::new_err("eps must be positive"));
    }
    Ok(pair(core_modular(&phi.0, &x.0, eps)))
}

#[pyfunction]
#[pyo3(signature = (phi, x, tol=1e-8))]
fn luxemburg_norm(phi: &PyOrlicz, x: &PySequence, tol: f64) -> PyResult<(f64, f64)> {
    core_norm(&phi.0, &x.0, tol).map(pair).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (phi, tol=1e-8))]
fn solve_alpha(phi: &PyOrlicz, tol: f64) -> PyResult<(f64, f64)> {
    core_solve_alpha(&phi.0, tol).map(pair).map_err(to_py)
}

/// Maps each property name to its certificate, or to the error code when no
/// certificate could be issued.
#[pyfunction]
#[pyo3(signature = (phi, tol=1e-8))]
fn certify(py: Python<'_>, phi: &PyOrlicz, tol: f64) -> PyResult<Vec<(&'static str, Py<PyAny>)>> {
    certify_all(&phi.0, tol)
        .into_iter()
        .map(|(prop, res)| {
            let value = match res {
                Ok(c) => Py::new(py, PyCertificate(c))?.into_any(),
                Err(e) => e.code().into_pyobject(py)?.into_any().unbind(),
            };
            Ok((prop.as_str(), value))
        })
        .collect()
}

/// Builds a counterexample pair: `kind` is `"sm"` or `"rotund"`.
#[pyfunction]
#[pyo3(signature = (phi, kind, tol=1e-8))]
fn witness(phi: &PyOrlicz, kind: &str, tol: f64) -> PyResult<PyWitness> {
    let phi = &phi.0;
    let w = match kind {
        "sm" => sm_failure_witness(phi, tol),
        "rotund" => rotundity_witness(phi, tol),
        other => return Err(PyValueError::new_err(format!("unknown witness kind `{other}`"))),
    };
    w.map(PyWitness).map_err(to_py)
}

/// Runs all property suites and returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (phis, seed=0, trials=200, tol=1e-8))]
fn run_suites(py: Python<'_>, phis: Vec<PyOrlicz>, seed: u64, trials: usize, tol: f64) -> PyResult<(bool, String)> {
    let cfg = SuiteConfig::new(seed, trials, tol, phis.into_iter().map(|p| p.0).collect()).map_err(to_py)?;
    let report = py.detach(|| run_all(&cfg));
    Ok((report.passed(), report.to_string()))
}

#[pymodule]
#[pyo3(name = "ces_orlicz")]
fn ces_orlicz_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyOrlicz>()?;
    m.add_class::<PySequence>()?;
    m.add_class::<PyCertificate>()?;
    m.add_class::<PyWitness>()?;
    m.add_function(wrap_pyfunction!(modular, m)?)?;
    m.add_function(wrap_pyfunction!(luxemburg_norm, m)?)?;
    m.add_function(wrap_pyfunction!(solve_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(run_suites, m)?)?;
    Ok(())
}
