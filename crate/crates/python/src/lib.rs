//! Python bindings for `rootspace`. Complex numbers cross the boundary as
//! Python `complex`.

use num_complex::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use rootspace::paths::TrackConfig;
use rootspace::perturbation::{certify_with, DEFAULT_RS_DELTA_THRESHOLD};
use rootspace::rootfinder::SolverConfig;
use rootspace::{BoundName, Error, OrderKind};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::NotConverged(_) | Error::DepthLimitExceeded { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn solver_config(tol: Option<f64>, max_iter: Option<usize>) -> PyResult<SolverConfig> {
    let mut cfg = SolverConfig::default();
    if let Some(t) = tol {
        cfg.residual_tolerance = t;
    }
    if let Some(m) = max_iter {
        cfg.max_iterations = m;
    }
    cfg.validate().map_err(py_err)?;
    Ok(cfg)
}

/// Monic polynomial `z^n + a_{n-1} z^{n-1} + ... + a_0`, built from
/// `[a_0, ..., a_{n-1}]`.
#[pyclass(name = "MonicPolynomial", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPolynomial(rootspace::MonicPolynomial);

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(coeffs: Vec<Complex64>) -> PyResult<Self> {
        rootspace::MonicPolynomial::new(coeffs).map(Self).map_err(py_err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn coeffs(&self) -> Vec<Complex64> {
        self.0.coeffs().to_vec()
    }

    fn __call__(&self, z: Complex64) -> Complex64 {
        self.0.eval(z)
    }

    fn __repr__(&self) -> String {
        format!("MonicPolynomial({})", self.0)
    }
}

/// Unordered multiset of `n >= 2` complex numbers.
#[pyclass(name = "RootMultiset", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMultiset(rootspace::RootMultiset);

#[pymethods]
impl PyMultiset {
    #[new]
    fn new(elems: Vec<Complex64>) -> PyResult<Self> {
        rootspace::RootMultiset::new(elems).map(Self).map_err(py_err)
    }

    #[getter]
    fn elems(&self) -> Vec<Complex64> {
        self.0.elems().to_vec()
    }

    fn sorted(&self) -> Vec<Complex64> {
        self.0.sorted()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("RootMultiset({:?})", self.0.sorted())
    }
}

#[pyclass(name = "SolveReport", frozen, get_all)]
struct PySolveReport {
    roots: PyMultiset,
    iterations: usize,
    max_residual: f64,
    converged: bool,
}

#[pyclass(name = "BoundCertificate", frozen, get_all)]
struct PyCertificate {
    bound_name: String,
    bound_value: f64,
    measured_df: f64,
    holds: bool,
}

#[pyclass(name = "ClusterStructure", frozen, get_all)]
struct PyClusters {
    centers: Vec<Complex64>,
    multiplicities: Vec<usize>,
    eta: f64,
}

#[pyclass(name = "RootTrajectory", frozen, get_all)]
struct PyTrajectory {
    ts: Vec<f64>,
    step_dfs: Vec<f64>,
    /// One curve per root: `branches[j][i]` is root `j` at `ts[i]`.
    branches: Vec<Vec<Complex64>>,
    total_variation: f64,
}

#[pyfunction]
fn poly_metric(f: &PyPolynomial, g: &PyPolynomial) -> PyResult<f64> {
    rootspace::poly_metric(&f.0, &g.0).map_err(py_err)
}

/// Returns `(value, permutation)`; `permutation[j]` is the index in `v`
/// matched with `u[j]`.
#[pyfunction]
fn multiset_metric(u: &PyMultiset, v: &PyMultiset) -> PyResult<(f64, Vec<usize>)> {
    let m = rootspace::multiset_metric(&u.0, &v.0).map_err(py_err)?;
    Ok((m.value, m.permutation.as_slice().to_vec()))
}

#[pyfunction]
fn expand(v: &PyMultiset) -> PyPolynomial {
    PyPolynomial(rootspace::expand(&v.0))
}

#[pyfunction]
fn cauchy_bound(p: &PyPolynomial) -> f64 {
    rootspace::cauchy_bound(&p.0)
}

#[pyfunction]
#[pyo3(signature = (p, tol=None, max_iter=None))]
fn solve(p: &PyPolynomial, tol: Option<f64>, max_iter: Option<usize>) -> PyResult<PySolveReport> {
    let r = rootspace::solve(&p.0, &solver_config(tol, max_iter)?).map_err(py_err)?;
    Ok(PySolveReport {
        roots: PyMultiset(r.roots),
        iterations: r.iterations,
        max_residual: r.max_residual,
        converged: r.converged,
    })
}

/// Roots of `p`; raises `RuntimeError` if the solver does not converge.
#[pyfunction]
fn roots(p: &PyPolynomial) -> PyResult<PyMultiset> {
    rootspace::roots_of(&p.0).map(PyMultiset).map_err(py_err)
}

/// `(gamma_cap, gamma, epsilon, bound)`.
#[pyfunction]
fn ostrowski(f: &PyPolynomial, g: &PyPolynomial) -> PyResult<(f64, f64, f64, f64)> {
    let d = rootspace::ostrowski(&f.0, &g.0).map_err(py_err)?;
    Ok((d.gamma_cap, d.gamma, d.epsilon, d.bound))
}

/// `(a_cap, delta, bound)`.
#[pyfunction]
fn rahman_schmeisser(f: &PyPolynomial, g: &PyPolynomial) -> PyResult<(f64, f64, f64)> {
    let d = rootspace::rahman_schmeisser(&f.0, &g.0).map_err(py_err)?;
    Ok((d.a_cap, d.delta, d.bound))
}

#[pyfunction]
#[pyo3(signature = (f, g, bound="ostrowski"))]
fn certify(f: &PyPolynomial, g: &PyPolynomial, bound: &str) -> PyResult<PyCertificate> {
    let which: BoundName = bound.parse().map_err(py_err)?;
    let c = certify_with(&f.0, &g.0, which, &SolverConfig::default()).map_err(py_err)?;
    Ok(PyCertificate {
        bound_name: c.bound_name.to_string(),
        bound_value: c.bound_value,
        measured_df: c.measured_df,
        holds: c.holds,
    })
}

#[pyfunction]
fn rs_delta_threshold() -> f64 {
    DEFAULT_RS_DELTA_THRESHOLD
}

#[pyfunction]
#[pyo3(signature = (v, tol=0.0))]
fn cluster_structure(v: &PyMultiset, tol: f64) -> PyClusters {
    let s = rootspace::cluster_structure(&v.0, tol);
    PyClusters {
        centers: s.centers,
        multiplicities: s.multiplicities,
        eta: s.eta,
    }
}

#[pyfunction]
#[pyo3(signature = (v, u, tol=0.0))]
fn disk_counts(v: &PyMultiset, u: &PyMultiset, tol: f64) -> PyResult<Vec<usize>> {
    rootspace::disk_counts(&v.0, &u.0, tol).map_err(py_err)
}

/// `order` is `"lex"` or `"modarg"`.
#[pyfunction]
#[pyo3(signature = (v, order="lex"))]
fn order_tuple(v: &PyMultiset, order: &str) -> PyResult<Vec<Complex64>> {
    let kind: OrderKind = order.parse().map_err(py_err)?;
    Ok(rootspace::order_tuple(&v.0, kind).into_entries())
}

type WitnessParts = (PyPolynomial, Vec<PyPolynomial>, Vec<f64>, Vec<f64>);

/// `(limit_poly, sequence_polys, df_gaps, ordered_gaps)`.
#[pyfunction]
#[pyo3(signature = (k_max=10))]
fn discontinuity_witness(k_max: usize) -> PyResult<WitnessParts> {
    let w = rootspace::discontinuity_witness(k_max).map_err(py_err)?;
    Ok((
        PyPolynomial(w.limit_poly),
        w.sequence_polys.into_iter().map(PyPolynomial).collect(),
        w.df_gaps,
        w.ordered_gaps,
    ))
}

/// Samples of a path from `v` to `w` through tuples with distinct
/// coordinates.
#[pyfunction]
#[pyo3(signature = (v, w, max_step=None))]
fn connect_in_d(
    v: Vec<Complex64>,
    w: Vec<Complex64>,
    max_step: Option<f64>,
) -> PyResult<Vec<Vec<Complex64>>> {
    let v = rootspace::ComplexTuple::new(v).map_err(py_err)?;
    let w = rootspace::ComplexTuple::new(w).map_err(py_err)?;
    let path = match max_step {
        Some(s) => rootspace::paths::connect_in_d_with_step(&v, &w, s),
        None => rootspace::connect_in_d(&v, &w),
    }
    .map_err(py_err)?;
    Ok(path.samples.into_iter().map(|t| t.into_entries()).collect())
}

#[pyfunction]
#[pyo3(signature = (p, q, steps=8, max_depth=None))]
fn track(
    p: &PyPolynomial,
    q: &PyPolynomial,
    steps: usize,
    max_depth: Option<usize>,
) -> PyResult<PyTrajectory> {
    let mut cfg = TrackConfig::default();
    if let Some(d) = max_depth {
        cfg.max_depth = d;
    }
    let t = rootspace::paths::track_with(&p.0, &q.0, steps, &cfg).map_err(py_err)?;
    Ok(PyTrajectory {
        branches: t.branches(),
        total_variation: t.total_variation(),
        ts: t.ts,
        step_dfs: t.step_dfs,
    })
}

#[pymodule]
#[pyo3(name = "rootspace")]
fn rootspace_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyMultiset>()?;
    m.add_class::<PySolveReport>()?;
    m.add_class::<PyCertificate>()?;
    m.add_class::<PyClusters>()?;
    m.add_class::<PyTrajectory>()?;
    m.add_function(wrap_pyfunction!(poly_metric, m)?)?;
    m.add_function(wrap_pyfunction!(multiset_metric, m)?)?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(cauchy_bound, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(roots, m)?)?;
    m.add_function(wrap_pyfunction!(ostrowski, m)?)?;
    m.add_function(wrap_pyfunction!(rahman_schmeisser, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(rs_delta_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(cluster_structure, m)?)?;
    m.add_function(wrap_pyfunction!(disk_counts, m)?)?;
    m.add_function(wrap_pyfunction!(order_tuple, m)?)?;
    m.add_function(wrap_pyfunction!(discontinuity_witness, m)?)?;
    m.add_function(wrap_pyfunction!(connect_in_d, m)?)?;
    m.add_function(wrap_pyfunction!(track, m)?)?;
    Ok(())
}
