//! Browser bindings for the verification kit: a dispersion-curve explorer,
//! a Hamiltonian spectrum panel and a suite runner, each returning JSON for
//! the static demo page to render.

use mcs_dkp::momentum::{dispersion_radial, dispersion_scan};
use mcs_dkp::schroedinger::build_h;
use mcs_dkp::{run_suite, Suite, SuiteConfig};
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

/// Dispersion table over a square spatial grid: rows of
/// `[p1, p2, p0_found, p0_expected, abs_err]`.
#[wasm_bindgen]
pub fn dispersion_table(
    p1min: f64,
    p1max: f64,
    p2min: f64,
    p2max: f64,
    grid: usize,
    mass: f64,
) -> String {
    match dispersion_scan((p1min, p1max), (p2min, p2max), grid, mass) {
        Ok(rows) => {
            let data: Vec<_> = rows
                .iter()
                .map(|r| json!([r.p1, r.p2, r.p0_found, r.p0_expected, r.abs_err]))
                .collect();
            json!({ "rows": data }).to_string()
        }
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Radial dispersion curve p0(|p|), found by rooting the characteristic
/// factor at each sample, paired with the closed form.
#[wasm_bindgen]
pub fn dispersion_curve(p_max: f64, samples: usize, mass: f64) -> String {
    match dispersion_radial(p_max, samples.max(2), mass) {
        Ok(rows) => {
            let data: Vec<_> = rows
                .iter()
                .map(|r| json!([r.p1, r.p0_found, r.p0_expected]))
                .collect();
            json!({ "curve": data, "mass": mass }).to_string()
        }
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Spectrum panel for the 5x5 Hamiltonian at one spatial momentum: claimed
/// eigenvalues, rank-measured multiplicities and the annihilating residual.
#[wasm_bindgen]
pub fn hamiltonian_spectrum(p1: f64, p2: f64, mass: f64) -> String {
    match build_h(p1, p2, mass) {
        Ok(h) => {
            let spectrum: Vec<_> = h
                .claimed_spectrum()
                .iter()
                .map(|&(lambda, want)| {
                    json!({
                        "eigenvalue": lambda,
                        "claimed_multiplicity": want,
                        "measured_multiplicity": h.multiplicity(lambda),
                    })
                })
                .collect();
            let (res, scale) = h.annihilating_residual();
            json!({
                "spectrum": spectrum,
                "annihilating_residual": res / scale,
                "energy": h.energy(),
            })
            .to_string()
        }
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Run one named check suite; returns the reports as a JSON array.
#[wasm_bindgen]
pub fn verify_suite(suite: &str, mass: f64, p1: f64, p2: f64, seed: u64, tol: f64) -> String {
    let Some(suite) = Suite::parse(suite) else {
        return json!({ "error": format!("unknown suite {suite:?}") }).to_string();
    };
    let cfg = SuiteConfig { mass, p1, p2, seed, tol };
    match run_suite(suite, &cfg) {
        Ok(reports) => {
            let rows: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| serde_json::from_str(&r.to_json()).expect("valid json"))
                .collect();
            json!({ "reports": rows }).to_string()
        }
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bindings_return_valid_json() {
        for s in [
            dispersion_curve(5.0, 8, 1.0),
            hamiltonian_spectrum(3.0, 4.0, 12.0),
            verify_suite("algebra", 1.0, 2.0, 2.0, 42, 1e-9),
            dispersion_table(-2.0, 2.0, -2.0, 2.0, 3, 1.0),
        ] {
            let v: serde_json::Value = serde_json::from_str(&s).unwrap();
            assert!(v.get("error").is_none(), "{s}");
        }
    }
}
