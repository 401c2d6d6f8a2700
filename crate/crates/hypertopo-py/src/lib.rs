//! Python bindings. Reports come back as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use hypertopo::colorings::{build_topcode_matrix, verify_kd_total_coloring, KdKind, KdParams};
use hypertopo::generators::{cyclic_k_uniform, enumerate_3i, strong_hyperedge_set};
use hypertopo::graph::Graph;
use hypertopo::groups::{verify_every_zero, GroupLaw, ShiftFamily};
use hypertopo::hyperset::{self as hs, Vertex};
use hypertopo::intersected::{build_v_intersected, find_proper_hamiltonian_cycle, hyperedge_connectivity, intersected_metrics};
use hypertopo::io::{canonical_hypergraph_json, GraphDocument, HypergraphDocument};
use hypertopo::treeforest;

fn err(e: hypertopo::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn big<'py>(py: Python<'py>, n: impl std::fmt::Display) -> PyResult<Bound<'py, PyAny>> {
    py.import("builtins")?.getattr("int")?.call1((n.to_string(),))
}

fn edge_set(edges: Vec<Vec<Vertex>>) -> PyResult<hs::HyperedgeSet> {
    let es = edges.into_iter().map(hs::Hyperedge::new).collect::<Result<Vec<_>, _>>().map_err(err)?;
    hs::HyperedgeSet::new(es).map_err(err)
}

fn parse_law(s: &str) -> PyResult<GroupLaw> {
    match s {
        "index" => Ok(GroupLaw::Index),
        "literal-offset" => Ok(GroupLaw::LiteralOffset),
        _ => Err(PyValueError::new_err(format!("unknown law {s:?}"))),
    }
}

fn parse_kind(s: &str) -> PyResult<KdKind> {
    serde_json::from_value(serde_json::Value::String(s.to_string()))
        .map_err(|_| PyValueError::new_err(format!("unknown coloring kind {s:?}")))
}

/// A hyperedge family over a finite ground set, kept in canonical order.
#[pyclass(name = "Hypergraph", module = "hypertopo_py", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyHypergraph {
    inner: hs::Hypergraph,
}

impl From<hs::Hypergraph> for PyHypergraph {
    fn from(inner: hs::Hypergraph) -> Self {
        PyHypergraph { inner }
    }
}

#[pymethods]
impl PyHypergraph {
    #[new]
    fn new(ground: Vec<Vertex>, edges: Vec<Vec<Vertex>>) -> PyResult<Self> {
        hs::Hypergraph::from_parts(&ground, &edges).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = HypergraphDocument::parse(text).map_err(err)?;
        doc.to_hypergraph().map(Self::from).map_err(err)
    }

    fn to_json(&self) -> String {
        canonical_hypergraph_json(&self.inner, None)
    }

    #[getter]
    fn ground(&self) -> Vec<Vertex> {
        self.inner.ground().elements().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<Vertex>> {
        self.inner.edges().iter().map(|e| e.members().to_vec()).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph(ground={:?}, edges={:?})", self.ground(), self.edges())
    }

    fn complement(&self) -> PyResult<Self> {
        hs::complement_set(&self.inner).map(Self::from).map_err(err)
    }

    fn graham_reduction(&self) -> Self {
        hs::graham_reduction(&self.inner).into()
    }

    #[pyo3(signature = (strict = true))]
    fn verify_3i<'py>(&self, py: Python<'py>, strict: bool) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &hs::verify_3i(&self.inner, strict))
    }

    /// Edges of the v-intersected graph plus vertex and edge set labels.
    fn v_intersected<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &GraphDocument::from_set_colored(&build_v_intersected(&self.inner)))
    }

    fn hamiltonian_cycle<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let c = find_proper_hamiltonian_cycle(&self.inner).map_err(err)?;
        to_py(py, &c)
    }

    fn metrics<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let m = intersected_metrics(&self.inner).map_err(err)?;
        let c = hyperedge_connectivity(&self.inner).map_err(err)?;
        to_py(py, &serde_json::json!({ "metrics": m, "connectivity": c }))
    }
}

#[pyfunction]
fn strong_set(m: usize, t: usize) -> PyResult<PyHypergraph> {
    strong_hyperedge_set(m, t).map(Into::into).map_err(err)
}

#[pyfunction]
fn cyclic_set(n: usize, k: usize) -> PyResult<PyHypergraph> {
    cyclic_k_uniform(n, k).map(Into::into).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, strict = true))]
fn enumerate(n: usize, strict: bool) -> PyResult<Vec<PyHypergraph>> {
    Ok(enumerate_3i(n, strict).map_err(err)?.into_iter().map(Into::into).collect())
}

/// Members of the shift family generated by `edges` modulo `modulus`.
#[pyfunction]
fn shift_family(edges: Vec<Vec<Vertex>>, modulus: u32) -> PyResult<Vec<Vec<Vec<Vertex>>>> {
    let fam = ShiftFamily::generate(&edge_set(edges)?, modulus).map_err(err)?;
    Ok(fam
        .members()
        .iter()
        .map(|m| m.iter().map(|e| e.members().to_vec()).collect())
        .collect())
}

#[pyfunction]
#[pyo3(signature = (edges, modulus, law = "index"))]
fn every_zero<'py>(py: Python<'py>, edges: Vec<Vec<Vertex>>, modulus: u32, law: &str) -> PyResult<Bound<'py, PyAny>> {
    let fam = ShiftFamily::generate(&edge_set(edges)?, modulus).map_err(err)?;
    to_py(py, &verify_every_zero(&fam, parse_law(law)?).map_err(err)?)
}

#[pyfunction]
fn complete_tree_count(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyAny>> {
    big(py, treeforest::spanning_tree_count(&Graph::complete(n)).map_err(err)?)
}

#[pyfunction]
fn tree_count(py: Python<'_>, vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Bound<'_, PyAny>> {
    let g = Graph::new(vertices, edges).map_err(err)?;
    big(py, treeforest::spanning_tree_count(&g).map_err(err)?)
}

#[pyfunction]
fn forest_count(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyAny>> {
    big(py, treeforest::forest_count(n).map_err(err)?)
}

/// `graph_json` is a graph document with vertex and edge colors.
#[pyfunction]
#[pyo3(signature = (graph_json, kind, k = 1, d = 1, strong = false))]
fn verify_kd<'py>(py: Python<'py>, graph_json: &str, kind: &str, k: i64, d: i64, strong: bool) -> PyResult<Bound<'py, PyAny>> {
    let c = GraphDocument::parse(graph_json).and_then(|g| g.to_coloring()).map_err(err)?;
    let p = KdParams::new(parse_kind(kind)?, k, d, strong).map_err(err)?;
    to_py(py, &verify_kd_total_coloring(&c, p).map_err(err)?)
}

#[pyfunction]
fn topcode<'py>(py: Python<'py>, graph_json: &str) -> PyResult<Bound<'py, PyAny>> {
    let c = GraphDocument::parse(graph_json).and_then(|g| g.to_coloring()).map_err(err)?;
    to_py(py, &build_topcode_matrix(&c).map_err(err)?.rows())
}

#[pymodule]
fn hypertopo_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(strong_set, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_set, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(shift_family, m)?)?;
    m.add_function(wrap_pyfunction!(every_zero, m)?)?;
    m.add_function(wrap_pyfunction!(complete_tree_count, m)?)?;
    m.add_function(wrap_pyfunction!(tree_count, m)?)?;
    m.add_function(wrap_pyfunction!(forest_count, m)?)?;
    m.add_function(wrap_pyfunction!(verify_kd, m)?)?;
    m.add_function(wrap_pyfunction!(topcode, m)?)?;
    Ok(())
}
