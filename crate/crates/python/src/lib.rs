//! Python bindings for `gpetersen`.
//!
//! Invalid parameters raise `ValueError`; a failed numerical guarantee
//! (eigensolver divergence, exhausted witness search) raises `RuntimeError`.

use gpetersen as gp;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: gp::Error) -> PyErr {
    match e {
        gp::Error::NoConvergence { .. } | gp::Error::SearchExhausted { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

fn params(n: i64, k: i64) -> PyResult<gp::GpParams> {
    gp::validate_params(n, k).map_err(to_py)
}

/// The generalised Petersen graph P(n, k). Outer vertex a_i is index i,
/// inner vertex b_i is index n + i.
#[pyclass(name = "PetersenGraph", module = "pygpetersen", frozen)]
struct PyPetersenGraph {
    inner: gp::Graph,
}

#[pymethods]
impl PyPetersenGraph {
    #[new]
    fn new(n: i64, k: i64) -> PyResult<Self> {
        Ok(PyPetersenGraph {
            inner: gp::build_graph(params(n, k)?),
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.params().n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.params().k()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(to_py(gp::Error::InvalidVertex {
                vertex: v,
                vertex_count: self.inner.vertex_count(),
            }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        self.inner.adjacency_matrix()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    /// Closed-form spectrum, descending.
    fn spectrum(&self) -> Vec<f64> {
        gp::closed_form_spectrum(self.inner.params()).values
    }

    /// Spectrum from the Jacobi eigensolver, descending.
    fn oracle_spectrum(&self) -> PyResult<Vec<f64>> {
        Ok(gp::oracle_spectrum(&self.inner).map_err(to_py)?.values)
    }

    fn boundary_size(&self, vertices: Vec<usize>) -> PyResult<usize> {
        gp::boundary_size(&self.inner, &vertices).map_err(to_py)
    }

    fn expanding_constant(&self) -> PyResult<PyExpansion> {
        let r = gp::expanding_constant_exact(&self.inner).map_err(to_py)?;
        Ok(PyExpansion {
            h: r.h,
            witness_set: r.witness_set,
            lower: r.lower,
            upper: r.upper,
            corollary_bound: r.corollary_bound,
        })
    }

    fn __repr__(&self) -> String {
        format!("PetersenGraph(n={}, k={})", self.n(), self.k())
    }
}

#[pyclass(name = "Expansion", module = "pygpetersen", frozen, get_all)]
struct PyExpansion {
    h: f64,
    witness_set: Vec<usize>,
    lower: f64,
    upper: f64,
    corollary_bound: Option<f64>,
}

#[pymethods]
impl PyExpansion {
    fn sandwich_holds(&self) -> bool {
        let slack = gp::expansion::SANDWICH_SLACK;
        self.lower <= self.h + slack && self.h <= self.upper + slack
    }

    fn __repr__(&self) -> String {
        format!(
            "Expansion(h={}, witness_set={:?}, lower={}, upper={})",
            self.h, self.witness_set, self.lower, self.upper
        )
    }
}

#[pyclass(name = "DirichletWitness", module = "pygpetersen", frozen, get_all)]
struct PyWitness {
    t: u64,
    x: Vec<i64>,
    q: u64,
    t0: u64,
}

impl From<gp::DirichletWitness> for PyWitness {
    fn from(w: gp::DirichletWitness) -> Self {
        PyWitness {
            t: w.t,
            x: w.x,
            q: w.q,
            t0: w.t0,
        }
    }
}

#[pymethods]
impl PyWitness {
    fn __repr__(&self) -> String {
        format!("DirichletWitness(t={}, x={:?}, q={}, t0={})", self.t, self.x, self.q, self.t0)
    }
}

#[pyclass(name = "GoodIndexSet", module = "pygpetersen", frozen, get_all)]
struct PyGoodIndexSet {
    n: usize,
    k: usize,
    eps: Option<f64>,
    q: u64,
    m: u64,
    indices: Vec<usize>,
}

impl From<gp::GoodIndexSet> for PyGoodIndexSet {
    fn from(s: gp::GoodIndexSet) -> Self {
        PyGoodIndexSet {
            n: s.n,
            k: s.k,
            eps: s.eps,
            q: s.q,
            m: s.m,
            indices: s.indices,
        }
    }
}

#[pyfunction]
fn closed_form_spectrum(n: i64, k: i64) -> PyResult<Vec<f64>> {
    Ok(gp::closed_form_spectrum(params(n, k)?).values)
}

#[pyfunction]
fn eig_pair(n: i64, k: i64, j: i64) -> PyResult<(f64, f64)> {
    let pair = gp::eig_pair(params(n, k)?, j).map_err(to_py)?;
    Ok((pair.plus_value, pair.minus_value))
}

#[pyfunction]
fn second_eigenvalue(n: i64, k: i64) -> PyResult<f64> {
    Ok(gp::second_eigenvalue(params(n, k)?))
}

/// Difference of the two largest values in `values`.
#[pyfunction]
fn spectral_gap(values: Vec<f64>) -> PyResult<f64> {
    let s = gp::Spectrum::new(0, 0, gp::Source::ClosedForm, values);
    gp::spectral_gap(&s).map_err(to_py)
}

#[pyfunction]
fn count_near_valency(values: Vec<f64>, eps: f64) -> PyResult<usize> {
    let s = gp::Spectrum::new(0, 0, gp::Source::ClosedForm, values);
    gp::count_near_valency(&s, eps).map_err(to_py)
}

#[pyfunction]
fn gap_bound(n: u64) -> PyResult<f64> {
    gp::gap_bound(n).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (a, q, t0 = 1))]
fn dirichlet_witness(a: Vec<f64>, q: u64, t0: u64) -> PyResult<PyWitness> {
    Ok(gp::dirichlet_witness(&a, q, t0).map_err(to_py)?.into())
}

#[pyfunction]
#[pyo3(signature = (a, q, t0 = 1, m = 1))]
fn dirichlet_witnesses(a: Vec<f64>, q: u64, t0: u64, m: u64) -> PyResult<Vec<PyWitness>> {
    let found = gp::dirichlet_witnesses(&a, q, t0, m).map_err(to_py)?;
    Ok(found.into_iter().map(PyWitness::from).collect())
}

#[pyfunction]
fn good_index_gap(n: i64, k: i64) -> PyResult<PyGoodIndexSet> {
    Ok(gp::good_index_gap(params(n, k)?).map_err(to_py)?.into())
}

#[pyfunction]
fn good_index_cluster(n: i64, k: i64, eps: f64) -> PyResult<PyGoodIndexSet> {
    Ok(gp::good_index_cluster(params(n, k)?, eps).map_err(to_py)?.into())
}

#[pyfunction]
fn euler_phi(n: u64) -> PyResult<u64> {
    gp::euler_phi(n).map_err(to_py)
}

#[pyfunction]
fn omega(n: u64) -> PyResult<u64> {
    gp::omega(n).map_err(to_py)
}

#[pyfunction]
fn kappa(m: u64) -> PyResult<u64> {
    gp::kappa(m).map_err(to_py)
}

#[pyfunction]
fn is_cayley(n: u64, k: u64) -> bool {
    gp::is_cayley(n, k)
}

#[pyfunction]
fn iso_class_count_coprime(m: u64) -> PyResult<u64> {
    gp::iso_class_count_coprime(m).map_err(to_py)
}

#[pyfunction]
fn brute_iso_classes_coprime(m: u64) -> PyResult<u64> {
    gp::brute_iso_classes_coprime(m).map_err(to_py)
}

/// Census rows as `(N, a_lower, b_count, ratio)` tuples.
#[pyfunction]
#[pyo3(name = "census")]
fn census_rows(big_n: u64) -> PyResult<Vec<(u64, u64, u64, f64)>> {
    let rows = gp::census(big_n).map_err(to_py)?;
    Ok(rows
        .into_iter()
        .map(|r| (r.big_n, r.a_lower, r.b_count, r.ratio))
        .collect())
}

#[pyfunction]
fn cheeger_bounds(lambda2: f64) -> PyResult<(f64, f64)> {
    gp::cheeger_bounds(lambda2).map_err(to_py)
}

#[pyfunction]
fn corollary_bound(n: u64) -> PyResult<f64> {
    gp::corollary_bound(n).map_err(to_py)
}

#[pymodule]
fn pygpetersen(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPetersenGraph>()?;
    m.add_class::<PyExpansion>()?;
    m.add_class::<PyWitness>()?;
    m.add_class::<PyGoodIndexSet>()?;
    m.add_function(wrap_pyfunction!(closed_form_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(eig_pair, m)?)?;
    m.add_function(wrap_pyfunction!(second_eigenvalue, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_gap, m)?)?;
    m.add_function(wrap_pyfunction!(count_near_valency, m)?)?;
    m.add_function(wrap_pyfunction!(gap_bound, m)?)?;
    m.add_function(wrap_pyfunction!(dirichlet_witness, m)?)?;
    m.add_function(wrap_pyfunction!(dirichlet_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(good_index_gap, m)?)?;
    m.add_function(wrap_pyfunction!(good_index_cluster, m)?)?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(kappa, m)?)?;
    m.add_function(wrap_pyfunction!(is_cayley, m)?)?;
    m.add_function(wrap_pyfunction!(iso_class_count_coprime, m)?)?;
    m.add_function(wrap_pyfunction!(brute_iso_classes_coprime, m)?)?;
    m.add_function(wrap_pyfunction!(census_rows, m)?)?;
    m.add_function(wrap_pyfunction!(cheeger_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(corollary_bound, m)?)?;
    m.add("VALENCY", gp::VALENCY)?;
    Ok(())
}
