//! Python bindings for the core library: identity suites, coefficient
//! densities from JSON jet/twist documents, and the heat-trace validators.
//! Reports with exact rationals come back as JSON strings; numeric fit
//! results come back as plain dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use chirality::scalar::{C64, GRat};
use chirality::spectral::{chiral_coeffs, dstar_d_coeffs, hplus_coeffs, TwistData};
use chirality::tensor::Tensor;
use chirality::torus;
use chirality::verify as verify_mod;

fn err(e: chirality::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Run the seeded identity suites; returns (suite, identity, passed) per
/// check across all trials, in trial order.
#[pyfunction]
#[pyo3(signature = (seed = 0, trials = 10, exact = true))]
fn verify(seed: u64, trials: usize, exact: bool) -> PyResult<Vec<(String, String, bool)>> {
    if trials == 0 {
        return Err(PyValueError::new_err("trials must be >= 1"));
    }
    let mut out = Vec::new();
    for trial in 0..trials as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial));
        let checks = if exact {
            verify_mod::run_trial::<GRat>(&mut rng, true).map_err(err)?
        } else {
            verify_mod::run_trial::<C64>(&mut rng, false).map_err(err)?
        };
        out.extend(checks.into_iter().map(|c| (c.suite.to_string(), c.name.to_string(), c.pass)));
    }
    Ok(out)
}

/// Per-term heat-coefficient densities for a JSON jet document (and an
/// optional JSON twist document).  `operator` is "dstar", "chiral" or
/// "hplus"; the result is a JSON string with exact "p/q" values.
#[pyfunction]
#[pyo3(signature = (jet_json, operator = "dstar", twist_json = None))]
fn density(jet_json: &str, operator: &str, twist_json: Option<&str>) -> PyResult<String> {
    let jet = chirality::io::parse_jet(jet_json).map_err(err)?;
    let rep = match operator {
        "dstar" => dstar_d_coeffs(&jet).map_err(err)?,
        "chiral" => chiral_coeffs(&jet).map_err(err)?,
        "hplus" => {
            let twist = match twist_json {
                Some(text) => chirality::io::parse_twist(text).map_err(err)?,
                None => TwistData::trivial(1),
            };
            hplus_coeffs(&jet, &twist).map_err(err)?
        }
        other => return Err(PyValueError::new_err(format!("unknown operator {other:?}"))),
    };
    Ok(chirality::io::coeff_report_json(&rep).to_string())
}

/// The chirality ratio -m / tr(gamma) of a JSON twist document, as a
/// "p/q" string; None when tr(gamma) = 0.
#[pyfunction]
fn chirality_ratio(twist_json: &str) -> PyResult<Option<String>> {
    let twist = chirality::io::parse_twist(twist_json).map_err(err)?;
    match chirality::spectral::barbero_immirzi(&twist) {
        Ok(b) => Ok(Some(b.re.to_string())),
        Err(_) => Ok(None),
    }
}

fn fit_dict<'py>(py: Python<'py>, fit: &torus::FitResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new_bound(py);
    d.set_item("a_hat", fit.a_hat.to_vec())?;
    d.set_item("a_analytic", fit.a_analytic.to_vec())?;
    d.set_item("rel_errors", fit.rel_errors.to_vec())?;
    d.set_item("residual", fit.residual)?;
    d.set_item("k_eff", fit.k_eff)?;
    d.set_item("times", fit.times.clone())?;
    d.set_item("trace", fit.trace.clone())?;
    Ok(d)
}

/// Brute-force heat-trace fit on the flat torus with constant torsion
/// T = t123 * theta^123 and vector part V = (v[0], ..., v[3]).
#[pyfunction]
#[pyo3(signature = (t123 = 0.0, v = None, cutoff = 30, times = None))]
fn heat_torus<'py>(
    py: Python<'py>,
    t123: f64,
    v: Option<[f64; 4]>,
    cutoff: usize,
    times: Option<Vec<f64>>,
) -> PyResult<Bound<'py, PyDict>> {
    let t: Tensor<f64> = chirality::torsion::theta123::<f64>(4).scale(&t123);
    let mut vt = Tensor::zeros(4, 1);
    for (i, x) in v.unwrap_or_default().iter().enumerate() {
        vt.set(&[i], *x);
    }
    let times = times.unwrap_or_else(torus::default_times);
    let spec = torus::TorusSpec::new(t, vt, cutoff, times).map_err(err)?;
    let fit = torus::heat_trace_fit(&spec).map_err(err)?;
    fit_dict(py, &fit)
}

/// Spectral heat-trace fit on the round 4-sphere.
#[pyfunction]
#[pyo3(signature = (times = None))]
fn sphere<'py>(py: Python<'py>, times: Option<Vec<f64>>) -> PyResult<Bound<'py, PyDict>> {
    let fit = torus::sphere_benchmark(times).map_err(err)?;
    fit_dict(py, &fit)
}

/// Integral identities for periodic single-mode torsion fields
/// T = theta^123 cos(k_t . x), V = e_1 sin(k_v . x); returns
/// {name: (lhs, rhs)}.
#[pyfunction]
fn torus_integrals<'py>(
    py: Python<'py>,
    k_t: [i64; 4],
    k_v: [i64; 4],
) -> PyResult<Bound<'py, PyDict>> {
    let t = torus::PeriodicField::zero(3)
        .with_mode(k_t, chirality::torsion::theta123::<f64>(4), Tensor::zeros(4, 3))
        .map_err(err)?;
    let v = torus::PeriodicField::zero(1)
        .with_mode(k_v, Tensor::zeros(4, 1), chirality::tensor::basis_covector::<f64>(4, 0))
        .map_err(err)?;
    let rep = torus::integral_identity_suite(&v, &t, None).map_err(err)?;
    let d = PyDict::new_bound(py);
    for (name, l, r) in &rep.entries {
        d.set_item(name, (*l, *r))?;
    }
    Ok(d)
}

#[pymodule]
fn chirality_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(density, m)?)?;
    m.add_function(wrap_pyfunction!(chirality_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(heat_torus, m)?)?;
    m.add_function(wrap_pyfunction!(sphere, m)?)?;
    m.add_function(wrap_pyfunction!(torus_integrals, m)?)?;
    Ok(())
}
