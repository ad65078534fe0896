use std::path::PathBuf;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use domgame::enumeration::{self, GraphSource};
use domgame::perfection;
use domgame::{GameVariant, Mover, VertexSet};

fn err(e: domgame::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_value(py: Python<'_>, value: &impl serde::Serialize) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn variant_and_mover(variant: &str, first: &str) -> PyResult<(GameVariant, Mover)> {
    Ok((variant.parse().map_err(err)?, first.parse().map_err(err)?))
}

/// A simple graph on at most 64 vertices.
#[pyclass(name = "Graph", module = "domgame_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(domgame::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        domgame::Graph::from_edges(n, edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        domgame::parse_graph6(line).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        domgame::Graph::parse_edge_list(text).map(PyGraph).map_err(err)
    }

    /// Catalog graph such as "P5", "C6", "F3", "co-domino" or "antihole7".
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        perfection::named_graph(name).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn kc(m: usize, n: usize) -> Self {
        PyGraph(perfection::kc_graph(m, n))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.n() {
            return Err(err(domgame::Error::VertexOutOfRange { vertex: v, n: self.0.n() }));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn graph6(&self) -> PyResult<String> {
        domgame::write_graph6(&self.0).map_err(err)
    }

    fn edge_list(&self) -> String {
        self.0.to_edge_list()
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn induced(&self, vertices: Vec<usize>) -> PyResult<Self> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.0.n()) {
            return Err(err(domgame::Error::VertexOutOfRange { vertex: v, n: self.0.n() }));
        }
        Ok(PyGraph(self.0.induced_subgraph(vertices.into_iter().collect())))
    }

    fn disjoint_union(&self, other: &PyGraph) -> PyResult<Self> {
        self.0.disjoint_union(&other.0).map(PyGraph).map_err(err)
    }

    fn join(&self, other: &PyGraph) -> PyResult<Self> {
        self.0.join(&other.0).map(PyGraph).map_err(err)
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_edge_list({:?})", self.0.to_edge_list())
    }
}

#[pyfunction]
fn domination_number(g: &PyGraph) -> usize {
    domgame::domination_number(&g.0)
}

#[pyfunction]
fn total_domination_number(g: &PyGraph) -> PyResult<usize> {
    domgame::total_domination_number(&g.0).map_err(err)
}

/// `variant` is "dom" or "total", `first` is "d" or "s".
#[pyfunction]
#[pyo3(signature = (g, variant="dom", first="d"))]
fn game_value(g: &PyGraph, variant: &str, first: &str) -> PyResult<usize> {
    let (variant, first) = variant_and_mover(variant, first)?;
    domgame::game_value(&g.0, variant, first).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, covered, variant="dom", first="d"))]
fn residual_game_value(g: &PyGraph, covered: Vec<usize>, variant: &str, first: &str) -> PyResult<usize> {
    let (variant, first) = variant_and_mover(variant, first)?;
    let covered: VertexSet = covered.into_iter().filter(|&v| v < 64).collect();
    domgame::residual_game_value(&g.0, covered, variant, first).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, variant="dom", first="d"))]
fn optimal_first_moves(g: &PyGraph, variant: &str, first: &str) -> PyResult<Vec<usize>> {
    let (variant, first) = variant_and_mover(variant, first)?;
    domgame::optimal_first_moves(&g.0, variant, first).map(|s| s.to_vec()).map_err(err)
}

/// `(perfect, certificate)` with the certificate as a dict.
#[pyfunction]
fn recognize(py: Python<'_>, g: &PyGraph) -> PyResult<Py<PyTuple>> {
    let r = perfection::recognize_gg_perfect(&g.0);
    let cert = json_value(py, &r.certificate)?;
    Ok(PyTuple::new(py, [r.perfect.into_pyobject(py)?.to_owned().into_any().unbind(), cert])?.unbind())
}

#[pyfunction]
fn is_gg_perfect(g: &PyGraph) -> bool {
    perfection::is_gg_perfect(&g.0)
}

#[pyfunction]
fn brute_force_gg_perfect(g: &PyGraph) -> bool {
    perfection::brute_force_gg_perfect(&g.0)
}

#[pyfunction]
fn is_minimally_gg_imperfect(g: &PyGraph) -> bool {
    perfection::is_minimally_gg_imperfect(&g.0)
}

#[pyfunction]
#[pyo3(signature = (g, shrink=false))]
fn classify(py: Python<'_>, g: &PyGraph, shrink: bool) -> PyResult<Py<PyAny>> {
    json_value(py, &perfection::classify_with(&g.0, shrink))
}

/// `(classes, contracted graph)`.
#[pyfunction]
fn mhc_contraction(g: &PyGraph) -> (Vec<Vec<usize>>, PyGraph) {
    let m = perfection::mhc_contraction(&g.0);
    (m.classes().iter().map(|c| c.to_vec()).collect(), PyGraph(m.contracted().clone()))
}

#[pyfunction]
fn is_psc(g: &PyGraph, family: &str) -> PyResult<bool> {
    let family: perfection::CliqueFamily = family.parse().map_err(err)?;
    Ok(perfection::is_psc(&g.0, &family))
}

/// Replays a construction script given in its text form.
#[pyfunction]
fn build(script: &str) -> PyResult<PyGraph> {
    let script: perfection::BuildScript = script.parse().map_err(err)?;
    perfection::build(&script).map(PyGraph).map_err(err)
}

#[pyfunction]
fn contains_induced(g: &PyGraph, pattern: &PyGraph) -> bool {
    perfection::contains_induced(&g.0, &pattern.0)
}

#[pyfunction]
fn are_isomorphic(g: &PyGraph, h: &PyGraph) -> bool {
    enumeration::are_isomorphic(&g.0, &h.0)
}

#[pyfunction]
fn enumerate_nonisomorphic(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(enumeration::enumerate_nonisomorphic(n).map_err(err)?.into_iter().map(PyGraph).collect())
}

fn source(n: Option<usize>, graph6_file: Option<PathBuf>) -> PyResult<GraphSource> {
    match (graph6_file, n) {
        (Some(p), _) => Ok(GraphSource::Graph6File(p)),
        (None, Some(n)) => Ok(GraphSource::Builtin(n)),
        (None, None) => Err(PyValueError::new_err("give n or graph6_file")),
    }
}

/// `(n, perfect_all, perfect_connected, min_imperfect)`.
#[pyfunction]
#[pyo3(signature = (n=None, graph6_file=None, jobs=0))]
fn table1(
    py: Python<'_>,
    n: Option<usize>,
    graph6_file: Option<PathBuf>,
    jobs: usize,
) -> PyResult<(usize, usize, usize, usize)> {
    let source = source(n, graph6_file)?;
    let row = py.detach(|| enumeration::table1(&source, jobs)).map_err(err)?;
    Ok((row.n, row.perfect_all, row.perfect_connected, row.min_imperfect))
}

/// Minimally imperfect graphs of a stream with their catalog names.
#[pyfunction]
#[pyo3(signature = (n=None, graph6_file=None, jobs=0))]
fn find_min_imperfect(
    py: Python<'_>,
    n: Option<usize>,
    graph6_file: Option<PathBuf>,
    jobs: usize,
) -> PyResult<Vec<(PyGraph, Option<String>)>> {
    let source = source(n, graph6_file)?;
    let found = py.detach(|| enumeration::find_min_imperfect(&source, jobs)).map_err(err)?;
    Ok(found.into_iter().map(|m| (PyGraph(m.graph), m.name)).collect())
}

#[pymodule]
fn domgame_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(total_domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(game_value, m)?)?;
    m.add_function(wrap_pyfunction!(residual_game_value, m)?)?;
    m.add_function(wrap_pyfunction!(optimal_first_moves, m)?)?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(is_gg_perfect, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_gg_perfect, m)?)?;
    m.add_function(wrap_pyfunction!(is_minimally_gg_imperfect, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(mhc_contraction, m)?)?;
    m.add_function(wrap_pyfunction!(is_psc, m)?)?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(contains_induced, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_nonisomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(table1, m)?)?;
    m.add_function(wrap_pyfunction!(find_min_imperfect, m)?)?;
    Ok(())
}
