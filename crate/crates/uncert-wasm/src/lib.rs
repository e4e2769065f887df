//! Browser bindings for the demo page.
//!
//! Three operations back the three interactive panels: region scatter sets,
//! contour fields over the unit square (or the population simplex), and a
//! full report for one point of the qutrit-to-two-qubit map. Data crosses
//! the boundary as flat `Float64Array`s or JSON strings.

use wasm_bindgen::prelude::*;

use uncert_core::{
    concurrence_general, concurrence_kappa_omega, contour_concurrence, contour_sum,
    extract_params, min_sum_surface, qutrit_boundary_min, qutrit_to_two_qubit,
};

/// `samples` region points as flattened `(d1, d2, boundary)` triples, where
/// `boundary` is 1.0 on rim points and 0.0 otherwise. `system` is `"qubit"`
/// or `"qutrit"`; the qutrit set carries the appended origin point.
#[wasm_bindgen]
pub fn region_points(system: &str, samples: u32, seed: u32) -> Result<Vec<f64>, JsError> {
    region_points_impl(system, samples as usize, seed as u64).map_err(|e| JsError::new(&e))
}

fn region_points_impl(system: &str, samples: usize, seed: u64) -> Result<Vec<f64>, String> {
    let points = match system {
        "qubit" => uncert_core::sample_qubit_region(samples, seed),
        "qutrit" => uncert_core::sample_qutrit_region(samples, seed),
        other => return Err(format!("unknown system {other:?}")),
    };
    let mut flat = Vec::with_capacity(points.len() * 3);
    for point in points {
        flat.push(point.d1);
        flat.push(point.d2);
        flat.push(match point.tag {
            uncert_core::RegionTag::Boundary => 1.0,
            uncert_core::RegionTag::Interior => 0.0,
        });
    }
    Ok(flat)
}

/// A contour field sampled on `grid_n` points per axis, flattened row-major
/// (y outer); invalid cells are NaN. `quantity` is `"sum"`, `"concurrence"`
/// or `"min-sum-surface"`.
#[wasm_bindgen]
pub fn contour_values(quantity: &str, grid_n: u32) -> Result<Vec<f64>, JsError> {
    contour_values_impl(quantity, grid_n as usize).map_err(|e| JsError::new(&e))
}

fn contour_values_impl(quantity: &str, grid_n: usize) -> Result<Vec<f64>, String> {
    if grid_n < 2 {
        return Err("grid needs at least 2 points per axis".to_string());
    }
    let grid = match quantity {
        "sum" => contour_sum(grid_n),
        "concurrence" => contour_concurrence(grid_n),
        "min-sum-surface" => min_sum_surface(grid_n),
        other => return Err(format!("unknown quantity {other:?}")),
    };
    Ok(grid
        .z
        .iter()
        .flat_map(|row| row.iter().map(|cell| cell.unwrap_or(f64::NAN)))
        .collect())
}

/// Samples of the lower region boundary `d2 = d1 sqrt(1 - d1^2)` as
/// flattened `(d1, d2)` pairs, for drawing curve overlays.
#[wasm_bindgen]
pub fn boundary_curve(points: u32) -> Vec<f64> {
    let count = (points as usize).max(2);
    let mut flat = Vec::with_capacity(count * 2);
    for k in 0..count {
        let d1 = k as f64 / (count - 1) as f64;
        flat.push(d1);
        flat.push(qutrit_boundary_min(d1).expect("abscissa in range"));
    }
    flat
}

/// Full report for one `(omega, r)` point of the map, as a JSON string:
/// variances and their sum, kappa, concurrence, the `(s, t)` parameters and
/// the two-qubit matrix as `[re, im]` pairs.
#[wasm_bindgen]
pub fn map_report(omega: f64, r1: f64, r2: f64, r3: f64) -> Result<String, JsError> {
    map_report_impl(omega, r1, r2, r3).map_err(|e| JsError::new(&e))
}

fn map_report_impl(omega: f64, r1: f64, r2: f64, r3: f64) -> Result<String, String> {
    let norm = (r1 * r1 + r2 * r2 + r3 * r3).sqrt();
    if !norm.is_finite() || norm <= 0.0 {
        return Err("mean-spin vector must be nonzero and finite".to_string());
    }
    let r = uncert_core::BlochVector::new(r1 / norm, r2 / norm, r3 / norm)
        .map_err(|e| e.to_string())?;
    let qutrit = uncert_core::AppendedQutrit::new(omega, r).map_err(|e| e.to_string())?;

    let report = uncert_core::two_qubit_uncertainty(&qutrit);
    let ko = uncert_core::KappaOmega::from_qutrit(&qutrit);
    let rho = qutrit_to_two_qubit(&qutrit);
    let params = extract_params(&rho).map_err(|e| e.to_string())?;
    let concurrence = concurrence_general(&rho).map_err(|e| e.to_string())?;

    let matrix: Vec<Vec<[f64; 2]>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    let entry = rho.mat()[(i, j)];
                    [entry.re, entry.im]
                })
                .collect()
        })
        .collect();

    serde_json::to_string(&serde_json::json!({
        "omega": qutrit.omega(),
        "kappa": ko.kappa(),
        "uncertainty": report,
        "concurrence": concurrence.value,
        "concurrence_closed_form": concurrence_kappa_omega(&ko),
        "params": params,
        "rho_ab": matrix,
    }))
    .map_err(|e| e.to_string())
}
