//! Python bindings. Structured results (trees, colourings, reports) come
//! back as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

use ::c4free as core;
use core::coloring::{self, OracleBudget};
use core::decompose::Variant;
use core::harness::{self, Check};
use core::patterns::{self, Pattern};
use core::verify;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn variant(name: &str) -> PyResult<Variant> {
    name.parse().map_err(value_error)
}

fn pattern(name: &str) -> PyResult<Pattern> {
    name.parse().map_err(value_error)
}

/// A simple undirected graph on vertices 0..n (n <= 64).
#[pyclass(name = "Graph", module = "c4free", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        core::Graph::from_edge_list(n, &edges)
            .map(PyGraph)
            .map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(code: &str) -> PyResult<Self> {
        core::Graph::from_graph6(code)
            .map(PyGraph)
            .map_err(value_error)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        core::Graph::parse_edge_list(text)
            .map(PyGraph)
            .map_err(value_error)
    }

    /// A named graph: petersen, bull, hammer, bowtie, diamond, T1..T3, or a
    /// pattern name such as P5, C7, K4.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        use core::graph::named;
        let g = match name {
            "petersen" => named::petersen(),
            "bowtie" => named::bowtie(),
            "diamond" => named::diamond(),
            other => pattern(other)?.realization(),
        };
        Ok(PyGraph(g))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.0.n() && v < self.0.n() && self.0.has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.0.neighbors(v).map(|s| s.to_vec()).map_err(value_error)
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn to_graph6(&self) -> String {
        self.0.to_graph6()
    }

    fn to_edge_list(&self) -> String {
        self.0.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.0.to_graph6())
    }
}

/// Lexicographically smallest induced embedding of a pattern, or None.
#[pyfunction]
fn find_induced(g: &PyGraph, name: &str) -> PyResult<Option<Vec<usize>>> {
    Ok(patterns::find_induced(&g.0, pattern(name)?))
}

#[pyfunction]
fn contains_induced(g: &PyGraph, name: &str) -> PyResult<bool> {
    Ok(patterns::contains_induced(&g.0, pattern(name)?))
}

/// Length of a shortest cycle, or None for a forest.
#[pyfunction]
fn girth(g: &PyGraph) -> Option<usize> {
    patterns::girth(&g.0)
}

#[pyfunction]
fn find_hole(g: &PyGraph) -> Option<Vec<usize>> {
    patterns::find_hole(&g.0).map(|h| h.vertices)
}

#[pyfunction]
fn clique_number(g: &PyGraph) -> usize {
    coloring::exact_clique_number(&g.0)
}

/// (chi, colours) for an optimal colouring.
#[pyfunction]
#[pyo3(signature = (g, limit = coloring::DEFAULT_EXACT_LIMIT))]
fn exact_chromatic(g: &PyGraph, limit: usize) -> PyResult<(usize, Vec<usize>)> {
    let (chi, c) = coloring::exact_chromatic_with_limit(&g.0, limit).map_err(value_error)?;
    Ok((chi, c.colors))
}

#[pyfunction]
fn find_clique_cutset<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Option<Bound<'py, PyAny>>> {
    match core::decompose::find_clique_cutset(&g.0).map_err(value_error)? {
        Some(cut) => Ok(Some(to_py(
            py,
            &serde_json::to_value(cut).map_err(value_error)?,
        )?)),
        None => Ok(None),
    }
}

#[pyfunction]
fn find_homogeneous_clique(g: &PyGraph) -> PyResult<Option<Vec<usize>>> {
    let found = core::decompose::find_homogeneous_clique(&g.0).map_err(value_error)?;
    Ok(found.map(|s| s.to_vec()))
}

/// {"quotient_graph6": str, "bags": [[int]]}
#[pyfunction]
fn blowup_quotient<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let cert = core::decompose::blowup_quotient(&g.0).map_err(value_error)?;
    to_py(py, &serde_json::to_value(cert).map_err(value_error)?)
}

/// Decomposition tree of a connected (C4, variant)-free graph.
#[pyfunction]
fn decompose<'py>(py: Python<'py>, g: &PyGraph, variant_name: &str) -> PyResult<Bound<'py, PyAny>> {
    let tree = core::decompose::build_decomposition_tree(&g.0, variant(variant_name)?)
        .map_err(value_error)?;
    to_py(py, &tree.to_json())
}

/// Colouring within the variant's bound:
/// {"colors", "used", "k", "bound", "variant"}.
#[pyfunction]
fn color<'py>(
    py: Python<'py>,
    g: &PyGraph,
    variant_name: &str,
    k: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let budget = OracleBudget::new(k).map_err(value_error)?;
    let c =
        coloring::color_within_bound(&g.0, variant(variant_name)?, budget).map_err(value_error)?;
    to_py(py, &serde_json::to_value(c).map_err(value_error)?)
}

/// Whether `colors` is proper and uses at most `bound` colours.
#[pyfunction]
fn verify_coloring(g: &PyGraph, colors: Vec<usize>, bound: usize) -> PyResult<bool> {
    let mut distinct = colors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let c = coloring::Coloring {
        used: distinct.len(),
        colors,
        k: 0,
        bound,
        variant: coloring::BoundKind::Exact,
    };
    coloring::verify_coloring(&g.0, &c).map_err(value_error)
}

/// Report entries for one check by name (centred-hole yields one per variant).
#[pyfunction]
fn check<'py>(py: Python<'py>, g: &PyGraph, name: &str) -> PyResult<Bound<'py, PyAny>> {
    let c: Check = name.parse().map_err(value_error)?;
    let entries = match c {
        Check::HammerStructure => vec![verify::check_hammer_structure(&g.0)],
        Check::BullStructure => vec![verify::check_bull_structure(&g.0)],
        Check::CentredHole => vec![
            verify::check_centred_hole(&g.0, Variant::Bull),
            verify::check_centred_hole(&g.0, Variant::Hammer),
        ],
        Check::CentredHoleFor(v) => vec![verify::check_centred_hole(&g.0, v)],
        Check::HomogeneousClique => vec![verify::check_bull_homogeneous_clique(&g.0)],
        Check::ConsecutiveNeighbours => vec![verify::check_consecutive_neighbours(&g.0)],
        Check::Color(_) => return Err(value_error("use color() for colouring checks")),
    };
    to_py(py, &serde_json::to_value(entries).map_err(value_error)?)
}

/// All connected graphs on n vertices, one per isomorphism class.
#[pyfunction]
fn connected_graphs(n: usize) -> PyResult<Vec<PyGraph>> {
    if n > 10 {
        return Err(value_error("generation is limited to n <= 10"));
    }
    Ok(core::generate::connected_graphs(n)
        .iter()
        .cloned()
        .map(PyGraph)
        .collect())
}

/// Runs a named colouring suite and returns its report.
#[pyfunction]
#[pyo3(signature = (name, max_n = 8))]
fn suite<'py>(py: Python<'py>, name: &str, max_n: usize) -> PyResult<Bound<'py, PyAny>> {
    let report = harness::coloring_suite(name, max_n, 0, None).map_err(value_error)?;
    to_py(py, &serde_json::to_value(report).map_err(value_error)?)
}

#[pymodule]
fn c4free(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(find_induced, m)?)?;
    m.add_function(wrap_pyfunction!(contains_induced, m)?)?;
    m.add_function(wrap_pyfunction!(girth, m)?)?;
    m.add_function(wrap_pyfunction!(find_hole, m)?)?;
    m.add_function(wrap_pyfunction!(clique_number, m)?)?;
    m.add_function(wrap_pyfunction!(exact_chromatic, m)?)?;
    m.add_function(wrap_pyfunction!(find_clique_cutset, m)?)?;
    m.add_function(wrap_pyfunction!(find_homogeneous_clique, m)?)?;
    m.add_function(wrap_pyfunction!(blowup_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(color, m)?)?;
    m.add_function(wrap_pyfunction!(verify_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(suite, m)?)?;
    Ok(())
}
