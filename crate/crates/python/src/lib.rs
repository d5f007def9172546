//! Python bindings: the `pysuperchar` extension module.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use superchar::characters::atypical_euler;
use superchar::decompose::kac_constituents;
use superchar::latex::{combination_to_latex, diagram_to_latex, laurent_to_latex};
use superchar::{self as sc, Basis, GammaGraphParams, Kind};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_kind(kind: &str) -> PyResult<Kind> {
    match kind {
        "full" => Ok(Kind::Full),
        "euler" => Ok(Kind::Euler),
        other => Err(PyValueError::new_err(format!("kind must be 'full' or 'euler', not '{other}'"))),
    }
}

/// A weight diagram `(A, B)` of `gl(m|n)`.
#[pyclass(name = "Diagram", module = "pysuperchar", frozen, eq, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PyDiagram(sc::Diagram);

#[pymethods]
impl PyDiagram {
    #[new]
    #[pyo3(signature = (m, n, a, b, kind = "full"))]
    fn new(m: usize, n: usize, a: Vec<i64>, b: Vec<i64>, kind: &str) -> PyResult<Self> {
        sc::Diagram::new(m, n, parse_kind(kind)?, a, b).map(PyDiagram).map_err(err)
    }

    /// The diagram of `gl(k|k)` whose only symbols are crosses at `crosses`.
    #[staticmethod]
    #[pyo3(signature = (k, crosses, kind = "full"))]
    fn atypical(k: usize, crosses: Vec<i64>, kind: &str) -> PyResult<Self> {
        sc::Diagram::atypical(k, k, parse_kind(kind)?, crosses)
            .map(PyDiagram)
            .map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(PyDiagram).map_err(err)
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn kind(&self) -> String {
        self.0.kind().to_string()
    }

    #[getter(A)]
    fn a(&self) -> Vec<i64> {
        self.0.a().iter().rev().copied().collect()
    }

    #[getter(B)]
    fn b(&self) -> Vec<i64> {
        self.0.b().iter().rev().copied().collect()
    }

    fn crosses(&self) -> Vec<i64> {
        self.0.crosses()
    }

    fn symbol(&self, x: i64) -> char {
        self.0.symbol(x).as_char()
    }

    fn admissible_partner(&self, a: i64) -> PyResult<i64> {
        self.0.admissible_partner(a).map_err(err)
    }

    fn is_partially_polynomial(&self) -> bool {
        self.0.is_partially_polynomial()
    }

    fn render(&self, lo: i64, hi: i64) -> String {
        self.0.render(lo, hi)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(err)
    }

    fn latex(&self) -> String {
        diagram_to_latex(&self.0)
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("Diagram{}", self.0)
    }
}

/// An exact Laurent polynomial in `x_1..x_m, y_1..y_n`.
#[pyclass(name = "LaurentPoly", module = "pysuperchar", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLaurent(sc::LaurentPoly);

#[pymethods]
impl PyLaurent {
    /// Builds a polynomial from `(x_exponents, y_exponents, coefficient)` terms.
    #[new]
    fn new(m: usize, n: usize, terms: Vec<(Vec<i64>, Vec<i64>, BigInt)>) -> PyResult<Self> {
        sc::LaurentPoly::from_terms(m, n, terms).map(PyLaurent).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(PyLaurent).map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(err)
    }

    fn terms(&self) -> Vec<(Vec<i64>, Vec<i64>, BigInt)> {
        self.0
            .terms()
            .map(|(mono, c)| (mono.x.clone(), mono.y.clone(), c.clone()))
            .collect()
    }

    fn constant_term(&self) -> BigInt {
        self.0.constant_term()
    }

    fn star(&self) -> Self {
        PyLaurent(self.0.star())
    }

    fn is_supersymmetric(&self) -> bool {
        self.0.is_supersymmetric()
    }

    fn latex(&self) -> String {
        laurent_to_latex(&self.0)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&other.0).map(PyLaurent).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_sub(&other.0).map(PyLaurent).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(PyLaurent).map_err(err)
    }

    fn __neg__(&self) -> Self {
        PyLaurent(-&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly({})", self.0)
    }
}

/// An integer combination of Kac, Euler or irreducible characters.
#[pyclass(name = "CharCombination", module = "pysuperchar", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyCombination(sc::CharCombination);

#[pymethods]
impl PyCombination {
    #[getter]
    fn basis(&self) -> &'static str {
        match self.0.basis() {
            Basis::Kac => "kac",
            Basis::Euler => "euler",
            Basis::Irreducible => "irr",
        }
    }

    fn terms(&self) -> Vec<(PyDiagram, i64)> {
        self.0
            .terms()
            .map(|(d, c)| (PyDiagram(d.clone()), c))
            .collect()
    }

    fn coeff(&self, d: &PyDiagram) -> i64 {
        self.0.coeff(&d.0)
    }

    /// Expansion as a Laurent polynomial (Kac and Euler bases only).
    fn to_laurent(&self) -> PyResult<PyLaurent> {
        self.0.to_laurent().map(PyLaurent).map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(err)
    }

    fn latex(&self) -> String {
        combination_to_latex(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("CharCombination({})", self.0)
    }
}

#[pyfunction]
fn kac_char(f: &PyDiagram) -> PyResult<PyLaurent> {
    sc::kac_char(&f.0).map(PyLaurent).map_err(err)
}

#[pyfunction]
fn euler_char(g: &PyDiagram) -> PyResult<PyLaurent> {
    sc::euler_char(&g.0.as_euler()).map(PyLaurent).map_err(err)
}

#[pyfunction]
fn proj_char(f: &PyDiagram) -> PyResult<PyLaurent> {
    sc::pairing::proj_char(&f.0).map(PyLaurent).map_err(err)
}

/// `ch L(f)` as `(Euler combination, Laurent polynomial)`.
#[pyfunction]
#[pyo3(signature = (f, window = None))]
fn irr_char(f: &PyDiagram, window: Option<i64>) -> PyResult<(PyCombination, PyLaurent)> {
    let (c, p) = sc::irr_char(&f.0, window).map_err(err)?;
    Ok((PyCombination(c), PyLaurent(p)))
}

/// The bilinear form computed as a constant term.
#[pyfunction]
#[pyo3(signature = (p, q, order = None))]
fn pair_oracle(p: &PyLaurent, q: &PyLaurent, order: Option<u32>) -> PyResult<BigInt> {
    sc::pair_oracle(&p.0, &q.0, order).map_err(err)
}

#[pyfunction]
fn pair_kac_kac(f: &PyDiagram, g: &PyDiagram) -> PyResult<i64> {
    sc::pair_kac_kac(&f.0, &g.0).map_err(err)
}

#[pyfunction]
fn pair_kac_euler(f: &PyDiagram, g: &PyDiagram) -> PyResult<i64> {
    sc::pair_kac_euler(&f.0, &g.0).map_err(err)
}

#[pyfunction]
fn pair_proj_kac(f: &PyDiagram, g: &PyDiagram) -> PyResult<i64> {
    sc::pair_proj_kac(&f.0, &g.0).map_err(err)
}

#[pyfunction]
fn pair_proj_euler(f: &PyDiagram, h: &PyDiagram) -> PyResult<i64> {
    sc::pair_proj_euler(&f.0, &h.0.as_euler()).map_err(err)
}

#[pyfunction]
fn proj_flag(f: &PyDiagram) -> PyResult<Vec<PyDiagram>> {
    let flag = sc::proj_flag(&f.0).map_err(err)?;
    Ok(flag.into_iter().map(PyDiagram).collect())
}

#[pyfunction(name = "kac_constituents")]
fn py_kac_constituents(g: &PyDiagram) -> PyResult<Vec<PyDiagram>> {
    let found = kac_constituents(&g.0).map_err(err)?;
    Ok(found.into_iter().map(PyDiagram).collect())
}

/// `{h: (P(f), E(h))}` over the Euler diagrams with a nonzero pairing.
#[pyfunction]
fn euler_support<'py>(py: Python<'py>, f: &PyDiagram) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for (h, v) in sc::euler_support(&f.0).map_err(err)? {
        out.set_item(PyDiagram(h), v)?;
    }
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (h, window = None))]
fn euler_to_irr(h: &PyDiagram, window: Option<i64>) -> PyResult<PyCombination> {
    sc::euler_to_irr(&h.0, window).map(PyCombination).map_err(err)
}

#[pyfunction]
fn p_set(n: usize, m: usize, lo: i64) -> PyResult<Vec<Vec<i64>>> {
    Ok(sc::p_set(n, m, lo).map_err(err)?.into_iter().collect())
}

#[pyfunction]
fn gl22_irr_char(a: i64, b: i64) -> PyResult<PyCombination> {
    sc::gl22_irr_char(a, b).map(PyCombination).map_err(err)
}

/// `χ(Γ_{n,m})` in the Euler basis of `gl(rank|rank)`.
#[pyfunction]
#[pyo3(signature = (n, m, rank = 2))]
fn chi_gamma(n: i64, m: i64, rank: usize) -> PyResult<PyCombination> {
    let params = GammaGraphParams::new(n, m).map_err(err)?;
    sc::chi_gamma(params, rank).map(PyCombination).map_err(err)
}

#[pyfunction]
fn shift_t(c: &PyCombination) -> PyResult<PyCombination> {
    sc::shift_t_euler(&c.0).map(PyCombination).map_err(err)
}

/// `E(B)` of `gl(k|k)` as a one-term combination.
#[pyfunction]
fn euler_basis(k: usize, b: Vec<i64>) -> PyResult<PyCombination> {
    let d = atypical_euler(k, &b).map_err(err)?;
    sc::CharCombination::single(Basis::Euler, &d, 1)
        .map(PyCombination)
        .map_err(err)
}

#[pymodule]
fn pysuperchar(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyCombination>()?;
    m.add_function(wrap_pyfunction!(kac_char, m)?)?;
    m.add_function(wrap_pyfunction!(euler_char, m)?)?;
    m.add_function(wrap_pyfunction!(proj_char, m)?)?;
    m.add_function(wrap_pyfunction!(irr_char, m)?)?;
    m.add_function(wrap_pyfunction!(pair_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(pair_kac_kac, m)?)?;
    m.add_function(wrap_pyfunction!(pair_kac_euler, m)?)?;
    m.add_function(wrap_pyfunction!(pair_proj_kac, m)?)?;
    m.add_function(wrap_pyfunction!(pair_proj_euler, m)?)?;
    m.add_function(wrap_pyfunction!(proj_flag, m)?)?;
    m.add_function(wrap_pyfunction!(py_kac_constituents, m)?)?;
    m.add_function(wrap_pyfunction!(euler_support, m)?)?;
    m.add_function(wrap_pyfunction!(euler_to_irr, m)?)?;
    m.add_function(wrap_pyfunction!(p_set, m)?)?;
    m.add_function(wrap_pyfunction!(gl22_irr_char, m)?)?;
    m.add_function(wrap_pyfunction!(chi_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(shift_t, m)?)?;
    m.add_function(wrap_pyfunction!(euler_basis, m)?)?;
    Ok(())
}
