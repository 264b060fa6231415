//! Python extension module exposing the exact toric Gauss map pipeline:
//! point configurations, jet matrices, spannedness tests, polytope
//! predicates, the order-k analysis and the brute-force cross-check.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use toric_gauss::gauss::{self, EnumerationMode};
use toric_gauss::point::{LatticePoint, PointConfiguration};
use toric_gauss::{families, jets, lattice, oracle, polytope, Error};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn points_out(points: &[LatticePoint]) -> Vec<Vec<BigInt>> {
    points.iter().map(|p| p.coords().to_vec()).collect()
}

fn parse_mode(mode: &str) -> PyResult<EnumerationMode> {
    match mode {
        "full" => Ok(EnumerationMode::Full),
        "exchange" => Ok(EnumerationMode::Exchange),
        other => Err(PyValueError::new_err(format!(
            "mode must be \"full\" or \"exchange\", got {other:?}"
        ))),
    }
}

/// A finite duplicate-free set of lattice points in Z^n.
#[pyclass(name = "PointConfiguration", frozen)]
struct PyPointConfiguration {
    inner: PointConfiguration,
}

#[pymethods]
impl PyPointConfiguration {
    #[new]
    fn new(points: Vec<Vec<BigInt>>) -> PyResult<Self> {
        if points.is_empty() {
            return Err(PyValueError::new_err("at least one point is required"));
        }
        let width = points[0].len();
        let inner = PointConfiguration::new(
            width,
            points.into_iter().map(LatticePoint::new).collect(),
        )
        .map_err(err)?;
        Ok(PyPointConfiguration { inner })
    }

    #[getter]
    fn ambient_rank(&self) -> usize {
        self.inner.ambient_rank()
    }

    #[getter]
    fn points(&self) -> Vec<Vec<BigInt>> {
        points_out(self.inner.points())
    }

    fn is_full_dimensional(&self) -> bool {
        self.inner.is_full_dimensional()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "PointConfiguration(rank={}, points={})",
            self.inner.ambient_rank(),
            self.inner.len()
        )
    }
}

/// Multi-indices of total order at most k in n variables, graded lex.
#[pyfunction]
fn multi_indices(n: usize, k: u32) -> Vec<Vec<u32>> {
    jets::multi_indices(n, k)
        .into_iter()
        .map(|m| m.exponents().to_vec())
        .collect()
}

/// The integer matrix of k-jets at (1,...,1), row-major.
#[pyfunction]
fn jet_matrix(cfg: &PyPointConfiguration, k: u32) -> Vec<Vec<BigInt>> {
    let jm = jets::jet_matrix(&cfg.inner, k);
    (0..jm.matrix.rows())
        .map(|r| jm.matrix.row(r).to_vec())
        .collect()
}

/// Generic rank of the k-jet evaluation (the general osculating dimension).
#[pyfunction]
fn osculating_dimension(cfg: &PyPointConfiguration, k: u32) -> usize {
    jets::osculating_dimension(&cfg.inner, k)
}

#[pyfunction]
fn is_generically_kjet_spanned(cfg: &PyPointConfiguration, k: u32) -> bool {
    jets::is_generically_kjet_spanned(&cfg.inner, k)
}

/// Sums of nonsingular q-subsets (the point set of the order-k osculating
/// variety), deduplicated and sorted.
#[pyfunction]
#[pyo3(signature = (cfg, k, budget = None))]
fn compute_bk(cfg: &PyPointConfiguration, k: u32, budget: Option<u64>) -> PyResult<Vec<Vec<BigInt>>> {
    let b = gauss::compute_bk(&cfg.inner, k, budget.unwrap_or(gauss::DEFAULT_BUDGET))
        .map_err(err)?;
    Ok(points_out(&b))
}

/// Full order-k Gauss map analysis as a dict.
#[pyfunction]
#[pyo3(signature = (cfg, k, mode = "full", budget = None))]
fn analyze<'py>(
    py: Python<'py>,
    cfg: &PyPointConfiguration,
    k: u32,
    mode: &str,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let report = gauss::analyze(
        &cfg.inner,
        k,
        parse_mode(mode)?,
        budget.unwrap_or(gauss::DEFAULT_BUDGET),
    )
    .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("order", report.order)?;
    d.set_item("ambient_rank", report.ambient_rank)?;
    d.set_item("q", report.q)?;
    d.set_item("mode", report.mode.as_str())?;
    d.set_item("b_k", points_out(&report.b_k))?;
    d.set_item("span_rank", report.span_rank)?;
    d.set_item("fiber_dimension", report.fiber_dimension)?;
    let projection: Vec<Vec<BigInt>> = (0..report.projection.rows())
        .map(|r| report.projection.row(r).to_vec())
        .collect();
    d.set_item("projection", projection)?;
    d.set_item("fiber_points", points_out(report.fiber_points.points()))?;
    d.set_item("span_is_full_lattice", report.span_is_full_lattice)?;
    d.set_item("finite", report.finite)?;
    d.set_item("birational", report.birational)?;
    d.set_item("veronese_exception", report.veronese_exception)?;
    Ok(d)
}

/// Finiteness classification combining the analysis with the polytope
/// predicates.
#[pyfunction]
#[pyo3(signature = (cfg, k, budget = None))]
fn classify<'py>(
    py: Python<'py>,
    cfg: &PyPointConfiguration,
    k: u32,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let c = gauss::classify(&cfg.inner, k, budget.unwrap_or(gauss::DEFAULT_BUDGET))
        .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("finite", c.finite)?;
    d.set_item("birational", c.birational)?;
    d.set_item("veronese", c.veronese)?;
    d.set_item("smooth", c.smooth)?;
    d.set_item("kjet_spanned", c.kjet_spanned)?;
    Ok(d)
}

/// V-representation, H-representation, edge graph and smoothness of the
/// convex hull.
#[pyfunction]
fn convex_hull<'py>(py: Python<'py>, cfg: &PyPointConfiguration) -> PyResult<Bound<'py, PyDict>> {
    let hull = polytope::convex_hull(&cfg.inner).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("dim", hull.dim())?;
    d.set_item("vertices", points_out(hull.vertices()))?;
    let facets: Vec<(Vec<BigInt>, BigInt)> = hull
        .facets()
        .iter()
        .map(|f| (f.normal.clone(), f.offset.clone()))
        .collect();
    d.set_item("facets", facets)?;
    d.set_item("edges", hull.edges().to_vec())?;
    d.set_item("smooth", polytope::is_smooth(&hull))?;
    let lengths: Vec<BigInt> = (0..hull.edges().len())
        .map(|e| polytope::edge_lattice_length(&hull, e))
        .collect();
    d.set_item("edge_lattice_lengths", lengths)?;
    Ok(d)
}

/// All lattice points of the convex hull of the configuration.
#[pyfunction]
fn hull_lattice_points(cfg: &PyPointConfiguration) -> PyResult<PyPointConfiguration> {
    let hull = polytope::convex_hull(&cfg.inner).map_err(err)?;
    Ok(PyPointConfiguration {
        inner: polytope::lattice_points(&hull),
    })
}

/// Edge criterion on the hull: every edge of lattice length at least k.
/// Valid only for smooth hulls.
#[pyfunction]
fn edge_criterion_kjet(cfg: &PyPointConfiguration, k: u32) -> PyResult<bool> {
    let hull = polytope::convex_hull(&cfg.inner).map_err(err)?;
    polytope::edge_criterion_kjet(&hull, k).map_err(err)
}

#[pyfunction]
fn is_k_veronese(cfg: &PyPointConfiguration, k: u32) -> PyResult<bool> {
    let hull = polytope::convex_hull(&cfg.inner).map_err(err)?;
    Ok(polytope::is_k_veronese(&hull, k))
}

/// Saturation of the row span of integer generators inside Z^ambient_rank;
/// returns the Hermite normal form basis rows.
#[pyfunction]
fn saturate(generators: Vec<Vec<BigInt>>, ambient_rank: usize) -> PyResult<Vec<Vec<BigInt>>> {
    use toric_gauss::matrix::IntMatrix;
    for row in &generators {
        if row.len() != ambient_rank {
            return Err(PyValueError::new_err(
                "generator rows must have ambient_rank entries",
            ));
        }
    }
    let m = if generators.is_empty() {
        IntMatrix::empty(ambient_rank)
    } else {
        IntMatrix::from_rows(generators)
    };
    let s = lattice::saturate(&m, ambient_rank);
    Ok(s.basis().row_vecs())
}

/// Brute-force cross-check of the optimized paths.
#[pyfunction]
#[pyo3(signature = (cfg, k, budget = None))]
fn cross_check<'py>(
    py: Python<'py>,
    cfg: &PyPointConfiguration,
    k: u32,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let check = oracle::cross_check(&cfg.inner, k, budget.unwrap_or(gauss::DEFAULT_BUDGET))
        .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("q", check.q)?;
    d.set_item("b_k_count", check.b_k_size)?;
    d.set_item("subsets_examined", check.subsets_examined)?;
    d.set_item("full_matches_oracle", check.full_matches_oracle)?;
    d.set_item("exchange_lattice_matches", check.exchange_lattice_matches)?;
    Ok(d)
}

#[pyfunction]
fn pn_family(n: usize, big_n: u32) -> PyPointConfiguration {
    PyPointConfiguration {
        inner: families::pn_family(n, big_n),
    }
}

#[pyfunction]
fn dilated_simplex(n: usize, k: u32) -> PyPointConfiguration {
    PyPointConfiguration {
        inner: families::dilated_simplex(n, k),
    }
}

#[pyfunction]
fn grid_box(dims: Vec<u32>) -> PyPointConfiguration {
    PyPointConfiguration {
        inner: families::grid_box(&dims),
    }
}

#[pyfunction]
fn hexagon() -> PyPointConfiguration {
    PyPointConfiguration {
        inner: families::hexagon(),
    }
}

#[pymodule]
fn toricgauss(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPointConfiguration>()?;
    m.add_function(wrap_pyfunction!(multi_indices, m)?)?;
    m.add_function(wrap_pyfunction!(jet_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(osculating_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(is_generically_kjet_spanned, m)?)?;
    m.add_function(wrap_pyfunction!(compute_bk, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(convex_hull, m)?)?;
    m.add_function(wrap_pyfunction!(hull_lattice_points, m)?)?;
    m.add_function(wrap_pyfunction!(edge_criterion_kjet, m)?)?;
    m.add_function(wrap_pyfunction!(is_k_veronese, m)?)?;
    m.add_function(wrap_pyfunction!(saturate, m)?)?;
    m.add_function(wrap_pyfunction!(cross_check, m)?)?;
    m.add_function(wrap_pyfunction!(pn_family, m)?)?;
    m.add_function(wrap_pyfunction!(dilated_simplex, m)?)?;
    m.add_function(wrap_pyfunction!(grid_box, m)?)?;
    m.add_function(wrap_pyfunction!(hexagon, m)?)?;
    Ok(())
}
