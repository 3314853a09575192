//! Python bindings: a `Graph` class plus the solvers, recognizers and
//! generators. Vertices are 0-indexed here, unlike the CLI's text output.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use bullmwss::bitset::VertexSet;
use bullmwss::generator;
use bullmwss::graph::{Graph as CoreGraph, Weights};
use bullmwss::modular::find_proper_homogeneous_set;
use bullmwss::mwss::{exact_mwss, ORACLE_NODE_BUDGET};
use bullmwss::patterns::{self, GraphClass};
use bullmwss::solver::{solve_p7bull, solve_s123bull, SolveOptions};
use bullmwss::textio;
use bullmwss::Error;

fn to_py_err(err: Error) -> PyErr {
    match &err {
        Error::Input(_) | Error::Unsupported(_) => PyValueError::new_err(err.to_string()),
        _ => PyRuntimeError::new_err(err.to_string()),
    }
}

fn parse_class(name: &str) -> PyResult<GraphClass> {
    match name {
        "p7bull" => Ok(GraphClass::P7Bull),
        "s123bull" => Ok(GraphClass::S123Bull),
        _ => Err(PyValueError::new_err(format!(
            "unknown class `{name}` (expected `p7bull` or `s123bull`)"
        ))),
    }
}

fn weights_for(g: &CoreGraph, weights: Option<Vec<u64>>) -> PyResult<Weights> {
    match weights {
        None => Ok(Weights::unit(g.n())),
        Some(w) if w.len() == g.n() => Ok(Weights(w)),
        Some(w) => Err(PyValueError::new_err(format!(
            "expected {} weights, got {}",
            g.n(),
            w.len()
        ))),
    }
}

/// An immutable simple graph over vertices `0..n`.
#[pyclass(frozen)]
struct Graph {
    inner: CoreGraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph { inner: CoreGraph::build(n, &edges).map_err(to_py_err)? })
    }

    /// Parses the `p mwss` text format; returns (graph, weights).
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<(Graph, Vec<u64>)> {
        let (g, w) = textio::parse_graph(text).map_err(to_py_err)?;
        Ok((Graph { inner: g }, w.0))
    }

    #[pyo3(signature = (weights=None))]
    fn to_text(&self, weights: Option<Vec<u64>>) -> PyResult<String> {
        let w = weights_for(&self.inner, weights)?;
        Ok(textio::write_graph(&self.inner, &w))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        if u >= self.inner.n() || v >= self.inner.n() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.has_edge(u, v))
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn complement(&self) -> Graph {
        Graph { inner: self.inner.complement() }
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.components().iter().map(|c| c.to_vec()).collect()
    }

    /// Exact MWSS via the decomposition solver; returns (weight, vertices).
    #[pyo3(signature = (class, weights=None, strict=false, threads=1))]
    fn solve(
        &self,
        class: &str,
        weights: Option<Vec<u64>>,
        strict: bool,
        threads: usize,
    ) -> PyResult<(u64, Vec<usize>)> {
        let w = weights_for(&self.inner, weights)?;
        let opts = SolveOptions { strict, threads: threads.max(1), ..Default::default() };
        let solved = match parse_class(class)? {
            GraphClass::P7Bull => solve_p7bull(&self.inner, &w, &opts),
            GraphClass::S123Bull => solve_s123bull(&self.inner, &w, &opts),
        };
        let (sol, _) = solved.map_err(to_py_err)?;
        Ok((sol.weight, sol.set.to_vec()))
    }

    /// Exact MWSS via branch and bound; returns (weight, vertices).
    #[pyo3(signature = (weights=None, budget=None))]
    fn oracle(&self, weights: Option<Vec<u64>>, budget: Option<u64>) -> PyResult<(u64, Vec<usize>)> {
        let w = weights_for(&self.inner, weights)?;
        let sol = exact_mwss(&self.inner, &w, budget.unwrap_or(ORACLE_NODE_BUDGET))
            .map_err(to_py_err)?;
        Ok((sol.weight, sol.set.to_vec()))
    }

    /// None when the graph belongs to the class, else (pattern, vertices).
    fn class_witness(&self, class: &str) -> PyResult<Option<(String, Vec<usize>)>> {
        let class = parse_class(class)?;
        Ok(patterns::class_witness(&self.inner, class)
            .map(|hit| (hit.pattern.to_string(), hit.embedding)))
    }

    fn in_class(&self, class: &str) -> PyResult<bool> {
        Ok(self.class_witness(class)?.is_none())
    }

    /// A proper homogeneous set, or None when the graph is prime.
    fn homogeneous_set(&self) -> Option<Vec<usize>> {
        find_proper_homogeneous_set(&self.inner).map(|m| m.to_vec())
    }

    /// First induced cycle of exact length k (4..=7), in cyclic order.
    fn find_hole(&self, k: usize) -> PyResult<Option<Vec<usize>>> {
        patterns::find_hole(&self.inner, k, &self.inner.vertex_set()).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

#[pyfunction]
fn random_in_class(n: usize, p: f64, class: &str, seed: u64) -> PyResult<Graph> {
    let class = match class {
        "p7bull" => generator::TargetClass::P7Bull,
        "s123bull" => generator::TargetClass::S123Bull,
        "bullfreeprime" => generator::TargetClass::BullFreePrime,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown class `{other}` (expected p7bull, s123bull or bullfreeprime)"
            )))
        }
    };
    Ok(Graph { inner: generator::random_in_class(n, p, class, seed).map_err(to_py_err)? })
}

#[pyfunction]
fn c7_blowup(sizes: [usize; 7]) -> PyResult<Graph> {
    Ok(Graph { inner: generator::c7_blowup(&sizes).map_err(to_py_err)? })
}

#[pyfunction]
fn twin_expand(g: &Graph, t: usize) -> PyResult<Graph> {
    Ok(Graph { inner: generator::twin_expand(&g.inner, t).map_err(to_py_err)? })
}

/// The 13-vertex fixture; returns (graph, c, d).
#[pyfunction]
fn fixture() -> (Graph, usize, usize) {
    let (g, c, d) = generator::fixture();
    (Graph { inner: g }, c, d)
}

#[pyfunction]
fn verify_solution(g: &Graph, weights: Option<Vec<u64>>, set: Vec<usize>, weight: u64) -> PyResult<bool> {
    let w = weights_for(&g.inner, weights)?;
    if set.iter().any(|&v| v >= g.inner.n()) {
        return Ok(false);
    }
    let sol = bullmwss::graph::Solution {
        set: VertexSet::from_iter(g.inner.n(), set),
        weight,
    };
    Ok(bullmwss::mwss::verify_solution(&g.inner, &w, &sol))
}

#[pymodule]
fn _bullmwss(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(random_in_class, m)?)?;
    m.add_function(wrap_pyfunction!(c7_blowup, m)?)?;
    m.add_function(wrap_pyfunction!(twin_expand, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(verify_solution, m)?)?;
    Ok(())
}
