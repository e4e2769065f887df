//! Figure-data products: uncertainty-region scatter sets and contour grids.
//!
//! Sampling measures are artifact choices for visual coverage (uniform ball
//! for qubits, uniform weight times uniform sphere for qutrits); the regions
//! themselves are defined by the inequalities, not by any measure.

use serde::{Deserialize, Serialize};

use crate::entanglement::concurrence_kappa_omega;
use crate::qubit::{qubit_region_contains, PauliDirection};
use crate::qutrit::{qutrit_boundary_min, qutrit_variance_pair, AppendedQutrit};
use crate::qubit::BlochVector;
use crate::sample::{ball_vector, unit_vector};
use crate::symmetric::{uncertainty_sum_kappa, KappaOmega};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Display tag: `boundary` marks points within 1e-6 of the region's rim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionTag {
    Interior,
    Boundary,
}

impl std::fmt::Display for RegionTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegionTag::Interior => write!(f, "interior"),
            RegionTag::Boundary => write!(f, "boundary"),
        }
    }
}

/// One sampled `(ΔA1, ΔA2)` pair, in standard deviations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionPoint {
    pub d1: f64,
    pub d2: f64,
    pub tag: RegionTag,
}

const BOUNDARY_TOL: f64 = 1e-6;

/// Samples the qubit uncertainty region: `n` ball-uniform Bloch states
/// measured along the fixed orthogonal frame `(x, y)`. Every returned point
/// satisfies `d1^2 + d2^2 >= 1`.
pub fn sample_qubit_region(n: usize, seed: u64) -> Vec<RegionPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let [r1, r2, _] = ball_vector(&mut rng);
            let d1 = (1.0 - r1 * r1).max(0.0).sqrt();
            let d2 = (1.0 - r2 * r2).max(0.0).sqrt();
            let tag = if ((d1 * d1 + d2 * d2).sqrt() - 1.0).abs() <= BOUNDARY_TOL {
                RegionTag::Boundary
            } else {
                RegionTag::Interior
            };
            debug_assert!(qubit_region_contains(d1, d2).unwrap());
            RegionPoint { d1, d2, tag }
        })
        .collect()
}

/// Samples the qutrit uncertainty region: `n` draws of uniform weight and
/// sphere-uniform unit mean-spin vector, measured along the frame `(x, y)`,
/// plus the deterministic origin point realized at zero weight. Returns
/// `n + 1` points.
pub fn sample_qutrit_region(n: usize, seed: u64) -> Vec<RegionPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<RegionPoint> = (0..n)
        .map(|_| {
            let omega: f64 = rng.random();
            let [r1, r2, r3] = unit_vector(&mut rng);
            let qutrit = AppendedQutrit::new(omega, BlochVector::new(r1, r2, r3).unwrap())
                .expect("sampled parameters are in range");
            let report =
                qutrit_variance_pair(&qutrit, &PauliDirection::x(), &PauliDirection::y())
                    .expect("fixed frame is orthogonal");
            let d1 = report.variances[0].sqrt();
            let d2 = report.variances[1].sqrt();
            RegionPoint {
                d1,
                d2,
                tag: qutrit_tag(d1, d2),
            }
        })
        .collect();
    // The origin is attainable exactly at omega = 0; append it so even small
    // samples show the region's distinguishing feature.
    points.push(RegionPoint {
        d1: 0.0,
        d2: 0.0,
        tag: RegionTag::Boundary,
    });
    points
}

fn qutrit_tag(d1: f64, d2: f64) -> RegionTag {
    let on_lower = (d2 - qutrit_boundary_min(d1).unwrap()).abs() <= BOUNDARY_TOL
        || (d1 - qutrit_boundary_min(d2).unwrap()).abs() <= BOUNDARY_TOL;
    if on_lower {
        RegionTag::Boundary
    } else {
        RegionTag::Interior
    }
}

/// A scalar field sampled over a rectangular grid. `z` is row-major with
/// shape `(y_vals.len(), x_vals.len())`; cells outside the field's domain
/// hold `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContourGrid {
    pub x_name: String,
    pub y_name: String,
    pub z_name: String,
    pub x_vals: Vec<f64>,
    pub y_vals: Vec<f64>,
    pub z: Vec<Vec<Option<f64>>>,
}

impl ContourGrid {
    /// Evaluates `f(x, y)` over the product grid; `None` marks invalid cells.
    pub fn evaluate(
        names: [&str; 3],
        x_vals: Vec<f64>,
        y_vals: Vec<f64>,
        mut f: impl FnMut(f64, f64) -> Option<f64>,
    ) -> Self {
        let z = y_vals
            .iter()
            .map(|&y| x_vals.iter().map(|&x| f(x, y)).collect())
            .collect();
        Self {
            x_name: names[0].to_string(),
            y_name: names[1].to_string(),
            z_name: names[2].to_string(),
            x_vals,
            y_vals,
            z,
        }
    }
}

/// `grid_n` evenly spaced values covering `[0, 1]` inclusive.
pub(crate) fn unit_linspace(grid_n: usize) -> Vec<f64> {
    assert!(grid_n >= 2, "grids need at least two points per axis");
    (0..grid_n)
        .map(|i| i as f64 / (grid_n - 1) as f64)
        .collect()
}

/// The two-qubit uncertainty sum `2ω - ω²κ²` over the unit square, with
/// `ω` on the y axis and `κ` on the x axis.
pub fn contour_sum(grid_n: usize) -> ContourGrid {
    ContourGrid::evaluate(
        ["kappa", "omega", "uncertainty_sum"],
        unit_linspace(grid_n),
        unit_linspace(grid_n),
        |kappa, omega| {
            Some(uncertainty_sum_kappa(
                &KappaOmega::new(omega, kappa).expect("grid values lie in [0, 1]"),
            ))
        },
    )
}

/// The concurrence `|ω(1+κ) - 1|` over the unit square, axes as in
/// [`contour_sum`].
pub fn contour_concurrence(grid_n: usize) -> ContourGrid {
    ContourGrid::evaluate(
        ["kappa", "omega", "concurrence"],
        unit_linspace(grid_n),
        unit_linspace(grid_n),
        |kappa, omega| {
            Some(concurrence_kappa_omega(
                &KappaOmega::new(omega, kappa).expect("grid values lie in [0, 1]"),
            ))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_points_never_enter_the_quadrant() {
        let points = sample_qubit_region(2000, 11);
        assert_eq!(points.len(), 2000);
        for p in &points {
            assert!(qubit_region_contains(p.d1, p.d2).unwrap());
        }
    }

    #[test]
    fn qubit_sampling_is_deterministic() {
        assert_eq!(sample_qubit_region(50, 3), sample_qubit_region(50, 3));
        assert_ne!(sample_qubit_region(50, 3), sample_qubit_region(50, 4));
    }

    #[test]
    fn empty_qubit_sample() {
        assert!(sample_qubit_region(0, 1).is_empty());
    }

    #[test]
    fn qutrit_sample_appends_origin() {
        let points = sample_qutrit_region(1, 1);
        assert_eq!(points.len(), 2);
        let origin = points.last().unwrap();
        assert_eq!((origin.d1, origin.d2), (0.0, 0.0));
        assert_eq!(origin.tag, RegionTag::Boundary);
    }

    #[test]
    fn qutrit_points_respect_lower_boundary() {
        for p in sample_qutrit_region(5000, 9) {
            assert!(p.d2 >= qutrit_boundary_min(p.d1).unwrap() - 1e-6);
            assert!(p.d1 >= qutrit_boundary_min(p.d2).unwrap() - 1e-6);
        }
    }

    #[test]
    fn sum_grid_corners() {
        let grid = contour_sum(3);
        assert_eq!(grid.x_vals, vec![0.0, 0.5, 1.0]);
        // omega = 0 row vanishes; the (omega=1, kappa=0) corner is 2.
        assert!(grid.z[0].iter().all(|v| v.unwrap() == 0.0));
        assert_eq!(grid.z[2][0].unwrap(), 2.0);
        assert_eq!(grid.z[2][2].unwrap(), 1.0);
        // The 3/4 level passes through (omega = 1/2, kappa = 1).
        assert_eq!(grid.z[1][2].unwrap(), 0.75);
    }

    #[test]
    fn concurrence_grid_corners() {
        let grid = contour_concurrence(2);
        // omega = 0 row is identically 1.
        assert!(grid.z[0].iter().all(|v| v.unwrap() == 1.0));
        assert_eq!(grid.z[1][0].unwrap(), 0.0);
        assert_eq!(grid.z[1][1].unwrap(), 1.0);
    }

    #[test]
    fn grid_shape_matches_dims() {
        let grid = contour_sum(5);
        assert_eq!(grid.z.len(), grid.y_vals.len());
        assert!(grid.z.iter().all(|row| row.len() == grid.x_vals.len()));
    }
}
