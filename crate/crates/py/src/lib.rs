//! Python bindings for the Whittaker evaluator. Functions mirror the CLI:
//! Cartan types are strings like "A2", Weyl words are 1-based comma strings
//! ("" for the identity), coweights are integer lists in simple-coroot
//! pairing coordinates, and rationals travel as strings ("1/2", "-2/3").

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use steinberg_whittaker::dominance;
use steinberg_whittaker::finite_oracle::enumerate_cell_census;
use steinberg_whittaker::hecke;
use steinberg_whittaker::padic_oracle::{self, Cell};
use steinberg_whittaker::root_system::{CartanType, Coweight, RootSystem, WeylElement};
use steinberg_whittaker::verify;
use steinberg_whittaker::whittaker::{self, Rat};

fn to_py(e: steinberg_whittaker::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn system(name: &str) -> PyResult<RootSystem> {
    let ct = CartanType::parse(name).map_err(to_py)?;
    RootSystem::new(ct).map_err(to_py)
}

fn coweight(rs: &RootSystem, coords: Vec<i64>) -> PyResult<Coweight> {
    if coords.len() != rs.rank() {
        return Err(PyValueError::new_err(format!(
            "coweight has {} coordinates, rank is {}",
            coords.len(),
            rs.rank()
        )));
    }
    Ok(Coweight::new(coords))
}

fn word(rs: &RootSystem, s: &str) -> PyResult<WeylElement> {
    rs.parse_weyl_word(s).map_err(to_py)
}

fn rational(s: &str) -> PyResult<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| PyValueError::new_err(format!("bad rational '{s}': {e}")))
}

fn cell(s: &str) -> PyResult<Cell> {
    match s {
        "e" => Ok(Cell::E),
        "s" => Ok(Cell::S),
        _ => Err(PyValueError::new_err(format!(
            "unknown cell '{s}', expected 'e' or 's'"
        ))),
    }
}

/// Names of the Cartan types this build evaluates.
#[pyfunction]
fn supported_types() -> Vec<String> {
    CartanType::all_supported()
        .into_iter()
        .map(|ct| ct.to_string())
        .collect()
}

/// Order of the Weyl group of the named type.
#[pyfunction]
fn weyl_order(cartan_type: &str) -> PyResult<u64> {
    Ok(CartanType::parse(cartan_type).map_err(to_py)?.weyl_order())
}

/// Number of positive roots of the named type.
#[pyfunction]
fn positive_root_count(cartan_type: &str) -> PyResult<usize> {
    Ok(CartanType::parse(cartan_type)
        .map_err(to_py)?
        .positive_root_count())
}

/// Reduced word of the longest Weyl element, 1-based.
#[pyfunction]
fn longest_word(cartan_type: &str) -> PyResult<Vec<usize>> {
    let rs = system(cartan_type)?;
    Ok(rs.weyl_word(&rs.longest_element()))
}

/// Length generating polynomial of the Weyl group, as a string in q.
#[pyfunction]
fn poincare_polynomial(cartan_type: &str) -> PyResult<String> {
    let rs = system(cartan_type)?;
    Ok(hecke::poincare_polynomial(&rs).to_string())
}

/// Symbolic Whittaker value at a coweight and Weyl cell, as a string in
/// q and z1..zr.
#[pyfunction]
fn eval_whittaker(cartan_type: &str, coords: Vec<i64>, weyl: &str) -> PyResult<String> {
    let rs = system(cartan_type)?;
    let lambda = coweight(&rs, coords)?;
    let w = word(&rs, weyl)?;
    Ok(whittaker::eval_whittaker(&rs, &lambda, &w).to_string())
}

/// Whittaker value specialized at q = p and the given Satake parameters,
/// returned as an exact rational string.
#[pyfunction]
fn eval_whittaker_at(
    cartan_type: &str,
    coords: Vec<i64>,
    weyl: &str,
    zs: Vec<String>,
    p: i64,
) -> PyResult<String> {
    let rs = system(cartan_type)?;
    let lambda = coweight(&rs, coords)?;
    let w = word(&rs, weyl)?;
    let zs = zs
        .iter()
        .map(|s| rational(s))
        .collect::<PyResult<Vec<Rat>>>()?;
    let value = whittaker::eval_whittaker(&rs, &lambda, &w)
        .specialize(Rat::new(p as i128, 1), &zs)
        .map_err(to_py)?;
    Ok(value.to_string())
}

/// Diagonal-torus character value chi(lambda) delta^{1/2}(lambda) as a
/// string in q and z1..zr.
#[pyfunction]
fn chi_delta(cartan_type: &str, coords: Vec<i64>) -> PyResult<String> {
    let rs = system(cartan_type)?;
    let lambda = coweight(&rs, coords)?;
    Ok(whittaker::chi_delta(&rs, &lambda).to_string())
}

/// Coweight shift that moves the support cone of the cell at `weyl` back
/// to the dominant cone.
#[pyfunction]
fn dominance_shift(cartan_type: &str, weyl: &str) -> PyResult<Vec<i64>> {
    let rs = system(cartan_type)?;
    let w = word(&rs, weyl)?;
    Ok(dominance::dominance_shift(&rs, &w).coords().to_vec())
}

/// Whether the coweight lies in the support cone of the cell at `weyl`.
#[pyfunction]
fn is_w_dominant(cartan_type: &str, coords: Vec<i64>, weyl: &str) -> PyResult<bool> {
    let rs = system(cartan_type)?;
    let lambda = coweight(&rs, coords)?;
    let w = word(&rs, weyl)?;
    Ok(dominance::is_w_dominant(&rs, &lambda, &w))
}

/// Runs the internal verification suites; returns (name, checks, pass)
/// triples.
#[pyfunction]
fn verify_suites(cartan_type: &str) -> PyResult<Vec<(String, u64, bool)>> {
    let rs = system(cartan_type)?;
    Ok(verify::all_suites(&rs)
        .into_iter()
        .map(|s| {
            let pass = s.pass();
            (s.name, s.checked, pass)
        })
        .collect())
}

/// Bruhat cell census of GL_n(F_p): dict from reduced word ("e" for the
/// identity) to the number of invertible matrices in that cell.
#[pyfunction]
fn cell_census(n: usize, p: u32) -> PyResult<std::collections::BTreeMap<String, u64>> {
    Ok(enumerate_cell_census(n, p).map_err(to_py)?.counts_by_word())
}

/// Compares the rank-one integral oracle against the closed formula at one
/// grid point. Keys: p, z, m, w, oracle (re, im), formula, abs_err, pass.
#[pyfunction]
fn padic_agreement(
    py: Python<'_>,
    m: i64,
    w: &str,
    z: &str,
    p: i64,
    tol: f64,
) -> PyResult<Py<PyDict>> {
    let row =
        padic_oracle::agreement_row(m, cell(w)?, rational(z)?, p, tol).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("p", row.p)?;
    d.set_item("z", row.z.to_string())?;
    d.set_item("m", row.m)?;
    d.set_item("w", row.w.to_string())?;
    d.set_item("oracle", (row.oracle.re, row.oracle.im))?;
    d.set_item("formula", row.formula.to_string())?;
    d.set_item("abs_err", row.abs_err)?;
    d.set_item("pass", row.pass)?;
    Ok(d.into())
}

#[pymodule]
fn whittaker_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(supported_types, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_order, m)?)?;
    m.add_function(wrap_pyfunction!(positive_root_count, m)?)?;
    m.add_function(wrap_pyfunction!(longest_word, m)?)?;
    m.add_function(wrap_pyfunction!(poincare_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(eval_whittaker, m)?)?;
    m.add_function(wrap_pyfunction!(eval_whittaker_at, m)?)?;
    m.add_function(wrap_pyfunction!(chi_delta, m)?)?;
    m.add_function(wrap_pyfunction!(dominance_shift, m)?)?;
    m.add_function(wrap_pyfunction!(is_w_dominant, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suites, m)?)?;
    m.add_function(wrap_pyfunction!(cell_census, m)?)?;
    m.add_function(wrap_pyfunction!(padic_agreement, m)?)?;
    Ok(())
}
