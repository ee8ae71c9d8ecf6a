//! Python bindings: slopes and θ-graphs, GL₂(Z), lens spaces, torus bundles, the
//! non-orientable census and one-vertex triangulations.

use complexity_core::assembling::{self, CensusClass};
use complexity_core::spine::{self, EnumerateOptions, PruneFlags};
use complexity_core::theta::{self, LensSpace};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A slope `p/q` on a torus; `Slope(1, 0)` is ∞.
#[pyclass(module = "complexity", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Slope(theta::Slope);

#[pymethods]
impl Slope {
    #[new]
    #[pyo3(signature = (p, q = 1))]
    fn new(p: i64, q: i64) -> PyResult<Slope> {
        theta::Slope::new(p, q).map(Slope).map_err(value_error)
    }

    /// Parses "∞", "inf", "p/q" or "p".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Slope> {
        text.parse().map(Slope).map_err(value_error)
    }

    #[getter]
    fn p(&self) -> i64 {
        self.0.p()
    }

    #[getter]
    fn q(&self) -> i64 {
        self.0.q()
    }

    fn is_infinite(&self) -> bool {
        self.0.is_infinite()
    }

    /// Geometric intersection number `|p q' − p' q|`.
    fn intersection(&self, other: Slope) -> u64 {
        self.0.intersection(other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Slope({}, {})", self.0.p(), self.0.q())
    }
}

/// Three slopes pairwise meeting once: a triangle of the Farey tessellation.
#[pyclass(module = "complexity", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct ThetaGraph(theta::ThetaGraph);

#[pymethods]
impl ThetaGraph {
    #[new]
    fn new(slopes: [Slope; 3]) -> PyResult<ThetaGraph> {
        theta::ThetaGraph::new(slopes.map(|s| s.0)).map(ThetaGraph).map_err(value_error)
    }

    /// Parses "{0,1,inf}".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<ThetaGraph> {
        text.parse().map(ThetaGraph).map_err(value_error)
    }

    /// `{0, 1, ∞}`.
    #[staticmethod]
    fn standard() -> ThetaGraph {
        ThetaGraph(theta::ThetaGraph::standard())
    }

    fn slopes(&self) -> Vec<Slope> {
        self.0.slopes().map(Slope).to_vec()
    }

    fn contains(&self, s: Slope) -> bool {
        self.0.contains(s.0)
    }

    /// Replaces `removed` by the other slope meeting the remaining two once.
    fn flip(&self, removed: Slope) -> PyResult<ThetaGraph> {
        self.0.flip(removed.0).map(ThetaGraph).map_err(value_error)
    }

    /// The slopes the three flips bring in.
    fn opposite_slopes(&self) -> Vec<Slope> {
        self.0.opposite_slopes().map(Slope).to_vec()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ThetaGraph.parse({:?})", self.0.to_string())
    }
}

/// An integer 2×2 matrix of determinant ±1, acting on slopes as column vectors `(p, q)`.
#[pyclass(module = "complexity", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Gl2(theta::Gl2);

#[pymethods]
impl Gl2 {
    #[new]
    fn new(matrix: [[i64; 2]; 2]) -> PyResult<Gl2> {
        theta::Gl2::new(matrix).map(Gl2).map_err(value_error)
    }

    /// Every matrix carrying the slopes of `source` onto those of `target`.
    #[staticmethod]
    fn theta_maps(source: ThetaGraph, target: ThetaGraph) -> Vec<Gl2> {
        theta::Gl2::theta_maps(source.0, target.0).into_iter().map(Gl2).collect()
    }

    fn entries(&self) -> [[i64; 2]; 2] {
        self.0.entries()
    }

    fn det(&self) -> i64 {
        self.0.det()
    }

    fn trace(&self) -> i64 {
        self.0.trace()
    }

    fn inverse(&self) -> Gl2 {
        Gl2(self.0.inverse())
    }

    fn __mul__(&self, other: Gl2) -> Gl2 {
        Gl2(self.0.mul(other.0))
    }

    fn apply(&self, s: Slope) -> Slope {
        Slope(self.0.apply(s.0))
    }

    fn apply_theta(&self, t: ThetaGraph) -> ThetaGraph {
        ThetaGraph(self.0.apply_theta(t.0))
    }

    /// Least `k` with `Aᵏ = I`, or `None`.
    fn order(&self) -> Option<u32> {
        self.0.order()
    }

    fn conjugacy_normal_form(&self) -> Gl2 {
        Gl2(self.0.conjugacy_normal_form())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Gl2({:?})", self.0.entries())
    }
}

/// Least number of flips joining two θ-graphs.
#[pyfunction]
fn flip_distance(a: ThetaGraph, b: ThetaGraph) -> usize {
    theta::flip_distance(a.0, b.0)
}

/// A shortest sequence of θ-graphs from `a` to `b`, both included.
#[pyfunction]
fn flip_path(a: ThetaGraph, b: ThetaGraph) -> Vec<ThetaGraph> {
    theta::flip_path(a.0, b.0).into_iter().map(ThetaGraph).collect()
}

/// Complexity of the lens space `L(p, q)`.
#[pyfunction]
fn lens_complexity(p: u64, q: u64) -> PyResult<usize> {
    LensSpace::new(p, q).map(theta::lens_complexity).map_err(value_error)
}

/// Canonical `(p, q)` of all lens spaces of complexity `0..=c_max`, grouped by complexity.
#[pyfunction]
fn lens_census(c_max: usize) -> PyResult<Vec<Vec<(u64, u64)>>> {
    let census = theta::lens_census(c_max).map_err(value_error)?;
    Ok(census.by_complexity.iter().map(|g| g.iter().map(|l| (l.p(), l.q())).collect()).collect())
}

/// Geometry name, conjugacy normal form, bundle normal form and order of a monodromy.
#[pyfunction]
fn classify_torus_bundle(matrix: [[i64; 2]; 2]) -> PyResult<(String, Gl2, Gl2, Option<u32>)> {
    let c = assembling::classify_torus_bundle(matrix).map_err(value_error)?;
    Ok((c.geometry.to_string(), Gl2(c.normal_form), Gl2(c.monodromy), c.order))
}

fn census_row<'py>(py: Python<'py>, complexity: u32, c: &CensusClass) -> PyResult<Bound<'py, PyDict>> {
    let row = PyDict::new(py);
    row.set_item("complexity", complexity)?;
    row.set_item("description", &c.name)?;
    row.set_item("geometry", c.geometry.to_string())?;
    row.set_item("chi_orb", c.chi_orb.map(|r| r.to_string()))?;
    row.set_item("monodromy", c.monodromy.map(|m| m.entries()))?;
    row.set_item("ledger", c.ledger)?;
    row.set_item("homology", c.homology.to_string())?;
    row.set_item("fibrations", c.fibrations.iter().map(|b| b.to_string()).collect::<Vec<_>>())?;
    row.set_item("constructions", &c.constructions)?;
    Ok(row)
}

/// The closed non-orientable manifolds of complexity 6, then the complexity 7 examples.
#[pyfunction]
fn nonorientable_census(py: Python<'_>) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let six = assembling::nonorientable_c6_census().map_err(value_error)?;
    let seven = assembling::c7_constructions().map_err(value_error)?;
    six.iter().map(|c| census_row(py, 6, c)).chain(seven.iter().map(|c| census_row(py, 7, c))).collect()
}

/// Canonical signatures of closed one-vertex triangulations with `n` tetrahedra.
#[pyfunction]
#[pyo3(signature = (n, workers = 1, criterion_one = false))]
fn enumerate_triangulations(py: Python<'_>, n: usize, workers: usize, criterion_one: bool) -> PyResult<Vec<String>> {
    let options = EnumerateOptions { flags: PruneFlags { criterion_one, ..Default::default() }, workers };
    let tables = py.detach(|| spine::enumerate_one_vertex(n, &options)).map_err(value_error)?;
    Ok(tables.into_iter().map(|t| t.signature.as_str().to_string()).collect())
}

/// First homology and orientability of the triangulation with this signature.
#[pyfunction]
fn triangulation_invariants(signature: &str) -> PyResult<(String, bool)> {
    let table = spine::table_from_signature(signature).map_err(value_error)?;
    let s = spine::dual_spine(&table).map_err(value_error)?;
    let orientable = spine::w1_cocycle(&table).map_err(value_error)?.orientable();
    Ok((spine::first_homology(&s).to_string(), orientable))
}

#[pymodule]
fn complexity(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Slope>()?;
    m.add_class::<ThetaGraph>()?;
    m.add_class::<Gl2>()?;
    m.add_function(wrap_pyfunction!(flip_distance, m)?)?;
    m.add_function(wrap_pyfunction!(flip_path, m)?)?;
    m.add_function(wrap_pyfunction!(lens_complexity, m)?)?;
    m.add_function(wrap_pyfunction!(lens_census, m)?)?;
    m.add_function(wrap_pyfunction!(classify_torus_bundle, m)?)?;
    m.add_function(wrap_pyfunction!(nonorientable_census, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_triangulations, m)?)?;
    m.add_function(wrap_pyfunction!(triangulation_invariants, m)?)?;
    Ok(())
}
