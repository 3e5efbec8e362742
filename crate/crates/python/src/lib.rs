//! Python bindings for the `tetraposet` crate.
//!
//! Arrays, matrices and plane partitions cross the boundary as nested lists.
//! Large integers become Python ints and polynomials become coefficient lists.

use num_bigint::{BigInt, BigUint};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use tetraposet::identities::{verify as verify_identity, Identity};
use tetraposet::poly::{
    asm_number as asm_count, closed_form as closed, tournament_gf as tgf, tspp_number as tspp_count,
};
use tetraposet::{
    Asm, Budget, ColorSet, Error, Method, MonotoneTriangle, OrderIdeal, QPoly, StaircaseArray, Subposet, Tournament,
    Tsscpp, Vertex,
};

create_exception!(tetraposet_py, ConstraintMismatch, PyValueError);
create_exception!(tetraposet_py, BudgetExceeded, PyValueError);

fn err(e: Error) -> PyErr {
    match e {
        Error::ConstraintMismatch { .. } => ConstraintMismatch::new_err(e.to_string()),
        Error::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn colors(s: &str) -> PyResult<ColorSet> {
    s.parse().map_err(err)
}

fn budget() -> PyResult<Budget> {
    Budget::from_env().map_err(err)
}

fn coeffs(p: &QPoly) -> Vec<BigInt> {
    p.coeffs()
}

fn array(rows: Vec<Vec<u32>>) -> PyResult<StaircaseArray> {
    StaircaseArray::from_rows(rows).map_err(err)
}

fn method(name: &str) -> PyResult<Method> {
    match name {
        "dp" => Ok(Method::Dp),
        "frontier" => Ok(Method::Frontier),
        "transfer" => Ok(Method::ArrayTransfer),
        "enum" => Ok(Method::Enumerate),
        _ => Err(PyValueError::new_err(format!("unknown method {name:?}"))),
    }
}

/// True when the color string names an admissible color set.
#[pyfunction]
fn is_admissible(colors: &str) -> PyResult<bool> {
    Ok(self::colors(colors)?.is_admissible())
}

/// All admissible color sets as compact strings.
#[pyfunction]
fn admissible_sets() -> Vec<String> {
    ColorSet::all_admissible().map(ColorSet::compact).collect()
}

/// Closed form for the ideal count, or None when no formula is known.
///
/// Returns a dict with keys `family`, `count` and `rank_gf` (None for the
/// families without a q-analogue).
#[pyfunction]
fn closed_form<'py>(py: Python<'py>, n: usize, colors: &str) -> PyResult<Option<Bound<'py, PyDict>>> {
    let Some(form) = closed(n, self::colors(colors)?).map_err(err)? else {
        return Ok(None);
    };
    let d = PyDict::new(py);
    d.set_item("family", form.family.name())?;
    d.set_item("count", form.count)?;
    d.set_item("rank_gf", form.rank_gf.as_ref().map(coeffs))?;
    Ok(Some(d))
}

#[pyfunction]
fn asm_number(n: usize) -> PyResult<BigUint> {
    asm_count(n).map_err(err)
}

#[pyfunction]
fn tspp_number(n: usize) -> PyResult<BigUint> {
    tspp_count(n).map_err(err)
}

/// Check an identity at order `n`; returns one report dict per checked row.
#[pyfunction]
fn verify<'py>(py: Python<'py>, identity: &str, n: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let identity: Identity = identity.parse().map_err(err)?;
    let reports = py
        .detach(|| verify_identity(identity, n, &Budget::from_env()?))
        .map_err(err)?;
    reports
        .into_iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("identity", r.identity.clone())?;
            d.set_item("n", r.n)?;
            d.set_item("status", if r.is_equal() { "equal" } else { "mismatch" })?;
            d.set_item("first_diff_monomial", r.first_diff_monomial)?;
            d.set_item("elapsed_ms", r.elapsed_ms)?;
            Ok(d)
        })
        .collect()
}

/// Tournament generating polynomial as a JSON term list.
#[pyfunction]
fn tournament_gf(n: usize) -> PyResult<String> {
    let p = tgf(n, &budget()?).map_err(err)?;
    Ok(serde_json::to_string(&p).expect("polynomials serialize"))
}

/// Order ideals of the tetrahedral poset restricted to a color set.
#[pyclass(name = "Poset", module = "tetraposet_py", frozen)]
struct PyPoset(Subposet);

#[pymethods]
impl PyPoset {
    #[new]
    #[pyo3(signature = (n, colors, dual = false))]
    fn new(n: usize, colors: &str, dual: bool) -> PyResult<Self> {
        let p = Subposet::build(n, self::colors(colors)?).map_err(err)?;
        Ok(PyPoset(if dual { p.dual() } else { p }))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn colors(&self) -> String {
        self.0.colors().compact()
    }

    #[getter]
    fn is_dual(&self) -> bool {
        self.0.is_dual()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        let dual = if self.0.is_dual() { ", dual=True" } else { "" };
        format!("Poset({}, {:?}{dual})", self.0.n(), self.0.colors().compact())
    }

    fn vertices(&self) -> Vec<[u32; 3]> {
        self.0.vertices().iter().map(|v| v.coords()).collect()
    }

    #[pyo3(signature = (method = "dp"))]
    fn count(&self, py: Python<'_>, method: &str) -> PyResult<BigUint> {
        let m = self::method(method)?;
        let b = budget()?;
        py.detach(|| self.0.count_ideals_by(m, &b)).map_err(err)
    }

    /// Coefficients of the ideal-size generating polynomial, lowest first.
    #[pyo3(signature = (method = "dp"))]
    fn rank_gf(&self, py: Python<'_>, method: &str) -> PyResult<Vec<BigInt>> {
        let m = self::method(method)?;
        let b = budget()?;
        py.detach(|| self.0.rank_gf_by(m, &b)).map(|p| coeffs(&p)).map_err(err)
    }

    fn ideals(&self) -> PyResult<Vec<Vec<[u32; 3]>>> {
        let it = self.0.enumerate_ideals(&budget()?).map_err(err)?;
        Ok(it.map(|i| i.members().iter().map(|v| v.coords()).collect()).collect())
    }

    fn is_ideal(&self, members: Vec<[u32; 3]>) -> bool {
        self.0.is_ideal(&members.into_iter().map(Vertex::from).collect())
    }

    fn ideal_to_array(&self, members: Vec<[u32; 3]>) -> PyResult<Vec<Vec<u32>>> {
        let ideal = OrderIdeal::new(&self.0, members.into_iter().map(Vertex::from)).map_err(err)?;
        Ok(self.0.ideal_to_array(&ideal).map_err(err)?.into())
    }

    fn array_to_ideal(&self, rows: Vec<Vec<u32>>) -> PyResult<Vec<[u32; 3]>> {
        let ideal = self.0.array_to_ideal(&array(rows)?).map_err(err)?;
        Ok(ideal.members().iter().map(|v| v.coords()).collect())
    }

    fn to_dot(&self) -> String {
        self.0.to_dot()
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }
}

/// Alternating sign matrix.
#[pyclass(name = "Asm", module = "tetraposet_py", frozen)]
struct PyAsm(Asm);

#[pymethods]
impl PyAsm {
    #[new]
    fn new(rows: Vec<Vec<i8>>) -> PyResult<Self> {
        Asm::new(rows).map(PyAsm).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyAsm(Asm::identity(n))
    }

    #[staticmethod]
    fn from_array(rows: Vec<Vec<u32>>) -> PyResult<Self> {
        Asm::from_array(&array(rows)?).map(PyAsm).map_err(err)
    }

    #[staticmethod]
    fn from_monotone_triangle(rows: Vec<Vec<u32>>) -> PyResult<Self> {
        Ok(PyAsm(MonotoneTriangle::new(rows).map_err(err)?.to_asm()))
    }

    #[staticmethod]
    fn enumerate(n: usize) -> PyResult<Vec<PyAsm>> {
        Ok(Asm::enumerate(n, &budget()?).map_err(err)?.map(PyAsm).collect())
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn rows(&self) -> Vec<Vec<i8>> {
        self.0.rows().to_vec()
    }

    fn count_negative(&self) -> usize {
        self.0.count_negative()
    }

    fn to_monotone_triangle(&self) -> Vec<Vec<u32>> {
        self.0.to_monotone_triangle().rows().to_vec()
    }

    fn to_array(&self) -> Vec<Vec<u32>> {
        self.0.to_array().into()
    }

    /// Raises ConstraintMismatch unless the array is also a tournament array.
    fn to_tournament(&self) -> PyResult<PyTournament> {
        Tournament::from_array(&self.0.to_array())
            .map(PyTournament)
            .map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Asm({:?})", self.0.rows())
    }
}

/// Totally symmetric self-complementary plane partition in a 2n-box.
#[pyclass(name = "Tsscpp", module = "tetraposet_py", frozen)]
struct PyTsscpp(Tsscpp);

#[pymethods]
impl PyTsscpp {
    #[new]
    fn new(heights: Vec<Vec<u32>>) -> PyResult<Self> {
        Tsscpp::new(heights).map(PyTsscpp).map_err(err)
    }

    #[staticmethod]
    fn from_array(rows: Vec<Vec<u32>>) -> PyResult<Self> {
        Tsscpp::from_array(&array(rows)?).map(PyTsscpp).map_err(err)
    }

    #[staticmethod]
    fn enumerate(n: usize) -> PyResult<Vec<PyTsscpp>> {
        Tsscpp::enumerate(n, &budget()?)
            .map_err(err)?
            .map(|t| t.map(PyTsscpp).map_err(err))
            .collect()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn heights(&self) -> Vec<Vec<u32>> {
        self.0.heights().to_vec()
    }

    fn to_array(&self) -> Vec<Vec<u32>> {
        self.0.to_array().into()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// Tournament on players 1..=n, given as (i, j, winner) games with i < j.
#[pyclass(name = "Tournament", module = "tetraposet_py", frozen)]
struct PyTournament(Tournament);

#[pymethods]
impl PyTournament {
    #[new]
    fn new(n: usize, games: Vec<(u32, u32, u32)>) -> PyResult<Self> {
        Tournament::new(n, &games).map(PyTournament).map_err(err)
    }

    #[staticmethod]
    fn transitive(n: usize) -> Self {
        PyTournament(Tournament::transitive(n))
    }

    #[staticmethod]
    fn from_array(rows: Vec<Vec<u32>>) -> PyResult<Self> {
        Tournament::from_array(&array(rows)?).map(PyTournament).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn games(&self) -> Vec<(u32, u32, u32)> {
        self.0.games()
    }

    fn upset_count(&self) -> usize {
        self.0.upset_count()
    }

    fn to_array(&self) -> Vec<Vec<u32>> {
        self.0.to_array().into()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

#[pymodule]
fn tetraposet_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ConstraintMismatch", m.py().get_type::<ConstraintMismatch>())?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_class::<PyPoset>()?;
    m.add_class::<PyAsm>()?;
    m.add_class::<PyTsscpp>()?;
    m.add_class::<PyTournament>()?;
    m.add_function(wrap_pyfunction!(is_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_sets, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(asm_number, m)?)?;
    m.add_function(wrap_pyfunction!(tspp_number, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(tournament_gf, m)?)?;
    Ok(())
}
