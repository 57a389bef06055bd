//! Python bindings: thin wrappers over the core types, exposing graph
//! construction, basis listing, canonical forms, and group arithmetic.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use pcnil::{parse_word, run_verification, Collector, CommutationGraph, MaltsevBasis};

fn err(e: pcnil::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Commutation graph: vertices are the generators, edges mark
/// commuting pairs. Later vertices in the listing are smaller in the
/// generator order.
#[pyclass(frozen)]
struct Graph {
    inner: CommutationGraph,
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (vertices, edges=Vec::new()))]
    fn new(vertices: Vec<String>, edges: Vec<(String, String)>) -> PyResult<Self> {
        Ok(Graph {
            inner: CommutationGraph::new(&vertices, &edges).map_err(err)?,
        })
    }

    /// Parse the JSON document form: {"vertices": [...], "edges": [[..,..], ...]}.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: CommutationGraph::parse(text).map_err(err)?,
        })
    }

    fn vertices(&self) -> Vec<String> {
        self.inner
            .vertices()
            .map(|v| self.inner.symbol(v).to_owned())
            .collect()
    }

    fn edges(&self) -> Vec<(String, String)> {
        self.inner
            .edges()
            .into_iter()
            .map(|(a, b)| {
                (
                    self.inner.symbol(a).to_owned(),
                    self.inner.symbol(b).to_owned(),
                )
            })
            .collect()
    }

    fn adjacent(&self, a: &str, b: &str) -> PyResult<bool> {
        let a = self.inner.vertex(a).map_err(err)?;
        let b = self.inner.vertex(b).map_err(err)?;
        Ok(self.inner.adjacent(a, b))
    }

    fn __repr__(&self) -> String {
        format!("Graph({})", self.inner)
    }
}

/// Canonical form: the exponent vector of a group element over the
/// ordered commutator basis.
#[pyclass(frozen, name = "NormalForm")]
struct PyNormalForm {
    inner: pcnil::NormalForm,
}

#[pymethods]
impl PyNormalForm {
    /// Exponents over the full basis, in basis order.
    fn exponents(&self) -> Vec<BigInt> {
        self.inner.exponents().to_vec()
    }

    /// (commutator, exponent) pairs for the nonzero entries.
    fn terms(&self) -> Vec<(String, BigInt)> {
        let g = self.inner.basis().graph();
        self.inner
            .nonzero_terms()
            .map(|(e, t)| (e.tree.format(g), t.clone()))
            .collect()
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn __str__(&self) -> String {
        self.inner.format()
    }

    fn __repr__(&self) -> String {
        format!("NormalForm({})", self.inner.format())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// The group determined by a graph and a nilpotency class, with its
/// basis and collection machinery built once up front.
#[pyclass(frozen)]
struct Group {
    collector: Collector,
}

#[pymethods]
impl Group {
    #[new]
    fn new(graph: &Graph, nilpotency_class: usize) -> PyResult<Self> {
        let basis = MaltsevBasis::construct(&graph.inner, nilpotency_class).map_err(err)?;
        Ok(Group {
            collector: Collector::new(basis).map_err(err)?,
        })
    }

    #[getter]
    fn nilpotency_class(&self) -> usize {
        self.collector.class()
    }

    /// The ordered basis as (weight, foliage, commutator) triples.
    fn basis(&self) -> Vec<(usize, String, String)> {
        let basis = self.collector.basis();
        let g = basis.graph();
        basis
            .elements()
            .iter()
            .map(|e| {
                (
                    e.weight,
                    pcnil::format_word(g, &e.foliage),
                    e.tree.format(g),
                )
            })
            .collect()
    }

    fn __len__(&self) -> usize {
        self.collector.basis().len()
    }

    /// Canonical form of a word such as "x1^2 [x1,x3] x2^-1".
    fn nf(&self, word: &str) -> PyResult<PyNormalForm> {
        let w = parse_word(self.collector.graph(), word).map_err(err)?;
        Ok(PyNormalForm {
            inner: self.collector.collect(&w).map_err(err)?,
        })
    }

    fn identity(&self) -> PyNormalForm {
        PyNormalForm {
            inner: self.collector.identity(),
        }
    }

    #[pyo3(name = "from_exponents")]
    fn nf_from_exponents(&self, exponents: Vec<BigInt>) -> PyResult<PyNormalForm> {
        Ok(PyNormalForm {
            inner: self.collector.from_exponents(exponents).map_err(err)?,
        })
    }

    fn mul(&self, a: &PyNormalForm, b: &PyNormalForm) -> PyResult<PyNormalForm> {
        Ok(PyNormalForm {
            inner: self.collector.nf_mul(&a.inner, &b.inner).map_err(err)?,
        })
    }

    fn inv(&self, a: &PyNormalForm) -> PyResult<PyNormalForm> {
        Ok(PyNormalForm {
            inner: self.collector.nf_inv(&a.inner).map_err(err)?,
        })
    }

    fn comm(&self, a: &PyNormalForm, b: &PyNormalForm) -> PyResult<PyNormalForm> {
        Ok(PyNormalForm {
            inner: self.collector.nf_comm(&a.inner, &b.inner).map_err(err)?,
        })
    }

    fn pow(&self, a: &PyNormalForm, exponent: BigInt) -> PyResult<PyNormalForm> {
        Ok(PyNormalForm {
            inner: self.collector.nf_pow(&a.inner, &exponent).map_err(err)?,
        })
    }

    /// A group word (in the input grammar) whose canonical form is `a`.
    fn word(&self, a: &PyNormalForm) -> PyResult<String> {
        let w = self.collector.reconstruct(&a.inner).map_err(err)?;
        Ok(w.format(self.collector.graph()))
    }
}

/// Run the counting, consistency, and round-trip checks; returns
/// (pass, report_json).
#[pyfunction]
#[pyo3(signature = (graph, nilpotency_class, trials=200, seed=0))]
fn verify(graph: &Graph, nilpotency_class: usize, trials: usize, seed: u64) -> PyResult<(bool, String)> {
    let report = run_verification(&graph.inner, nilpotency_class, trials, seed).map_err(err)?;
    let text = serde_json::to_string_pretty(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((report.pass(), text))
}

#[pymodule]
fn pcnil_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Group>()?;
    m.add_class::<PyNormalForm>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
