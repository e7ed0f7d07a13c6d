//! Python bindings: `import intsymp`.

use std::str::FromStr;

use intsymp::characters::intsymp::{intsymp_char, CharSpec, Method};
use intsymp::identities::{verify_main, MainIdentityCase};
use intsymp::qgen::{gf_closed_form, hopkins_lai_count, GFCase, Weight};
use intsymp::ring::qseries::q_text;
use intsymp::shapes::{Family, Partition};
use intsymp::tilings::{flashlight_count, tiling_gf, FlashlightRegion};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: intsymp::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn spec(shape: &str, n: usize, k: usize, method: &str) -> PyResult<CharSpec> {
    let lam = Partition::from_str(shape).map_err(err)?;
    CharSpec::new(lam, n, k, Method::from_str(method).map_err(err)?).map_err(err)
}

/// The character `sp^{(k,n-k)}_λ` as text.
#[pyfunction]
#[pyo3(signature = (shape, n, k, method = "tableau"))]
fn character(shape: &str, n: usize, k: usize, method: &str) -> PyResult<String> {
    Ok(intsymp_char(&spec(shape, n, k, method)?).map_err(err)?.to_text())
}

/// The same character in the JSON term-list form.
#[pyfunction]
#[pyo3(signature = (shape, n, k, method = "tableau"))]
fn character_json(shape: &str, n: usize, k: usize, method: &str) -> PyResult<String> {
    Ok(intsymp_char(&spec(shape, n, k, method)?).map_err(err)?.to_json())
}

#[pyfunction]
fn method_names() -> Vec<&'static str> {
    Method::ALL.iter().map(|m| m.name()).collect()
}

#[pyfunction]
fn check_main(n: usize, k: usize, m: u32, a: u32, variant: u8) -> PyResult<bool> {
    let case = MainIdentityCase::new(n, k, m, a, variant).map_err(err)?;
    Ok(verify_main(&case).map_err(err)?.equal)
}

/// Decimal string of the count, so large values survive the crossing.
#[pyfunction]
fn hopkins_lai(n: usize, k: usize, m: u32) -> PyResult<String> {
    Ok(hopkins_lai_count(n, k, m).map_err(err)?.to_string())
}

#[pyfunction]
fn spp_count(n: usize, k: usize, m: u32) -> PyResult<u64> {
    if k > n {
        return Err(PyValueError::new_err(format!("k = {k} exceeds n = {n}")));
    }
    Ok(intsymp::qgen::spp_count(n, k, m))
}

#[pyfunction]
#[pyo3(signature = (n, k, m, a = 0, family = "par", weight = "v"))]
fn gf(n: usize, k: usize, m: u32, a: u32, family: &str, weight: &str) -> PyResult<String> {
    let family = Family::from_str(family).map_err(err)?;
    let weight = Weight::from_str(weight).map_err(err)?;
    let case = GFCase::new(n, k, m, a, family, weight).map_err(err)?;
    Ok(q_text(&gf_closed_form(&case).map_err(err)?))
}

#[pyfunction]
fn tiling_count(x: u32, y: u32, z: u32, t: u32) -> PyResult<u64> {
    Ok(flashlight_count(&FlashlightRegion::new(x, y, z, t)).map_err(err)?.count)
}

#[pyfunction]
fn tiling_generating_function(m: u32, n: usize, k: usize, a: u32) -> PyResult<String> {
    Ok(tiling_gf(m, n, k, a).map_err(err)?.to_text())
}

#[pymodule]
#[pyo3(name = "intsymp")]
fn intsymp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(character_json, m)?)?;
    m.add_function(wrap_pyfunction!(method_names, m)?)?;
    m.add_function(wrap_pyfunction!(check_main, m)?)?;
    m.add_function(wrap_pyfunction!(hopkins_lai, m)?)?;
    m.add_function(wrap_pyfunction!(spp_count, m)?)?;
    m.add_function(wrap_pyfunction!(gf, m)?)?;
    m.add_function(wrap_pyfunction!(tiling_count, m)?)?;
    m.add_function(wrap_pyfunction!(tiling_generating_function, m)?)?;
    Ok(())
}
