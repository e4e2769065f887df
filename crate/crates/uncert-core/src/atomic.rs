//! Pauli-like observables on the two-level subspaces of a 3-level system,
//! the uncertainty-sum minimum in level populations, and steady-state presets
//! for the three driving schemes.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::qubit::{require_orthogonal, PauliDirection};
use crate::region::{unit_linspace, ContourGrid};
use crate::state::{DensityMatrix, Observable, UncertaintyReport};

/// An ordered pair of level indices selecting a two-level subspace,
/// `1 <= i < j <= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubspacePair {
    i: usize,
    j: usize,
}

impl SubspacePair {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if !matches!((i, j), (1, 2) | (1, 3) | (2, 3)) {
            return Err(Error::InvalidPair { i, j });
        }
        Ok(Self { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn all() -> [SubspacePair; 3] {
        [
            SubspacePair { i: 1, j: 2 },
            SubspacePair { i: 1, j: 3 },
            SubspacePair { i: 2, j: 3 },
        ]
    }
}

impl std::fmt::Display for SubspacePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.i, self.j)
    }
}

/// The Pauli operator along axis `k` embedded in the `(i, j)` subspace of a
/// 3-level system; the remaining row and column are zero.
pub fn sigma_ij(pair: SubspacePair, axis: usize) -> Result<Observable> {
    if !(1..=3).contains(&axis) {
        return Err(Error::InvalidAxis { axis });
    }
    let (row, col) = (pair.i() - 1, pair.j() - 1);
    let mut mat = ComplexMatrix::zeros(3);
    match axis {
        1 => {
            mat[(row, col)] = Complex64::ONE;
            mat[(col, row)] = Complex64::ONE;
        }
        2 => {
            mat[(row, col)] = Complex64::new(0.0, -1.0);
            mat[(col, row)] = Complex64::new(0.0, 1.0);
        }
        _ => {
            mat[(row, row)] = Complex64::ONE;
            mat[(col, col)] = -Complex64::ONE;
        }
    }
    Ok(Observable::new(mat).expect("subspace Pauli operators are Hermitian"))
}

/// The mean-spin vector of the `(i, j)` subspace.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubspaceBlochVector {
    pub n1: f64,
    pub n2: f64,
    pub n3: f64,
}

impl SubspaceBlochVector {
    pub fn norm(&self) -> f64 {
        (self.n1 * self.n1 + self.n2 * self.n2 + self.n3 * self.n3).sqrt()
    }

    pub fn dot(&self, direction: &PauliDirection) -> f64 {
        let [a1, a2, a3] = direction.components();
        self.n1 * a1 + self.n2 * a2 + self.n3 * a3
    }
}

/// Subspace mean-spin vector `n_k = Tr[rho sigma_k^(ij)]`, in closed form
/// `(2 Re rho_ij, -2 Im rho_ij, rho_ii - rho_jj)`.
///
/// For any valid state `|n| <= rho_ii + rho_jj` (positivity of the subspace
/// block).
pub fn subspace_bloch(rho: &DensityMatrix, pair: SubspacePair) -> Result<SubspaceBlochVector> {
    if rho.dim() != 3 {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: 3,
        });
    }
    let (row, col) = (pair.i() - 1, pair.j() - 1);
    let coherence = rho.mat()[(row, col)];
    Ok(SubspaceBlochVector {
        n1: 2.0 * coherence.re,
        n2: -2.0 * coherence.im,
        n3: rho.mat()[(row, row)].re - rho.mat()[(col, col)].re,
    })
}

/// Variance report for the orthogonal subspace pair `(sigma^(ij).a,
/// sigma^(ij).b)`, in closed form: both second moments equal
/// `rho_ii + rho_jj` and the means are projections of the subspace mean-spin
/// vector.
pub fn atomic_uncertainty_sum(
    rho: &DensityMatrix,
    pair: SubspacePair,
    a: &PauliDirection,
    b: &PauliDirection,
) -> Result<UncertaintyReport> {
    require_orthogonal(a, b)?;
    let n = subspace_bloch(rho, pair)?;
    let (row, col) = (pair.i() - 1, pair.j() - 1);
    let weight = rho.mat()[(row, row)].re + rho.mat()[(col, col)].re;
    let means = vec![n.dot(a), n.dot(b)];
    let seconds = vec![weight, weight];
    Ok(UncertaintyReport::from_moments(means, seconds))
}

/// The frame that minimizes the subspace variance sum: the first direction
/// along the subspace mean-spin vector, the second any fixed perpendicular.
///
/// A vanishing mean-spin vector leaves every frame equivalent; the fallback
/// is the subspace `(x, y)` frame.
pub fn optimal_frame(n: &SubspaceBlochVector) -> (PauliDirection, PauliDirection) {
    let norm = n.norm();
    if norm < 1e-14 {
        return (PauliDirection::x(), PauliDirection::y());
    }
    let unit = [n.n1 / norm, n.n2 / norm, n.n3 / norm];
    // Gram-Schmidt against a fixed reference axis.
    let reference = if unit[2].abs() > 1.0 - 1e-6 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 0.0, 1.0]
    };
    let overlap = reference[0] * unit[0] + reference[1] * unit[1] + reference[2] * unit[2];
    let mut perp = [
        reference[0] - overlap * unit[0],
        reference[1] - overlap * unit[1],
        reference[2] - overlap * unit[2],
    ];
    let perp_norm = (perp[0] * perp[0] + perp[1] * perp[1] + perp[2] * perp[2]).sqrt();
    for component in &mut perp {
        *component /= perp_norm;
    }
    (
        PauliDirection::new(unit[0], unit[1], unit[2]).expect("normalized"),
        PauliDirection::new(perp[0], perp[1], perp[2]).expect("normalized"),
    )
}

/// The least attainable subspace variance sum for fixed level populations:
/// `2(rho_ii + rho_jj) - (rho_ii + rho_jj)^2`. Equals 1 exactly when the two
/// populations exhaust the state.
pub fn min_uncertainty_sum(pop_i: f64, pop_j: f64) -> Result<f64> {
    let reason = if pop_i < 0.0 || pop_j < 0.0 {
        Some("populations must be nonnegative")
    } else if pop_i + pop_j > 1.0 + 1e-12 {
        Some("populations exceed unit total")
    } else {
        None
    };
    if let Some(reason) = reason {
        return Err(Error::InvalidPopulations {
            p1: pop_i,
            p2: pop_j,
            p3: 1.0 - pop_i - pop_j,
            reason,
        });
    }
    let weight = pop_i + pop_j;
    Ok(2.0 * weight - weight * weight)
}

/// Steady-state population presets for the three driving schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AtomicPreset {
    /// Coherent population trapping: empty upper level, equal lower levels.
    Lambda,
    /// Strong coupling plus incoherent pump; the reported populations
    /// (0.2, 0.4, 0.4) are stored as exact rationals of the quoted
    /// approximations.
    Vee,
    /// Ladder driving; populations are known only as ranges, so the preset
    /// evaluates to intervals.
    Xi,
}

impl AtomicPreset {
    /// Point populations `(rho_11, rho_22, rho_33)`; `None` for the ladder
    /// scheme, which is range-valued.
    pub fn populations(&self) -> Option<[f64; 3]> {
        match self {
            AtomicPreset::Lambda => Some([0.0, 0.5, 0.5]),
            AtomicPreset::Vee => Some([0.2, 0.4, 0.4]),
            AtomicPreset::Xi => None,
        }
    }
}

impl std::fmt::Display for AtomicPreset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AtomicPreset::Lambda => write!(f, "lambda"),
            AtomicPreset::Vee => write!(f, "vee"),
            AtomicPreset::Xi => write!(f, "xi"),
        }
    }
}

/// A preset evaluation: a point value, or an interval when the populations
/// are only known as ranges.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MinSum {
    Point(f64),
    Interval(f64, f64),
}

/// The ladder-scheme minimum as a function of its free population, for the
/// two pairs with allowed transitions: pair (1,2) is parameterized by
/// `rho_33` in `[1/3, 1/2]`, pair (2,3) by `rho_11` in `[0, 1/3]`.
pub fn xi_min_sum(pair: SubspacePair, population: f64) -> Result<f64> {
    let (name, min, max) = match (pair.i(), pair.j()) {
        (1, 2) => ("rho_33", 1.0 / 3.0, 0.5),
        (2, 3) => ("rho_11", 0.0, 1.0 / 3.0),
        _ => {
            return Err(Error::InvalidPair {
                i: pair.i(),
                j: pair.j(),
            })
        }
    };
    if !(min..=max).contains(&population) {
        return Err(Error::OutOfRange {
            name,
            value: population,
            min,
            max,
        });
    }
    let weight = 1.0 - population;
    Ok(2.0 * weight - weight * weight)
}

/// Evaluates a preset for every pair with allowed transitions, in pair order.
pub fn preset_min_sums(preset: AtomicPreset) -> Vec<(SubspacePair, MinSum)> {
    let pair = |i, j| SubspacePair::new(i, j).expect("fixed valid pairs");
    match preset {
        AtomicPreset::Lambda | AtomicPreset::Vee => {
            let populations = preset.populations().expect("point presets");
            let pairs = match preset {
                AtomicPreset::Lambda => [pair(1, 2), pair(1, 3)],
                _ => [pair(1, 3), pair(2, 3)],
            };
            pairs
                .iter()
                .map(|&p| {
                    let value =
                        min_uncertainty_sum(populations[p.i() - 1], populations[p.j() - 1])
                            .expect("preset populations are valid");
                    (p, MinSum::Point(value))
                })
                .collect()
        }
        AtomicPreset::Xi => {
            // Interval endpoints come from the monotone evaluator at the
            // range limits.
            let low_12 = xi_min_sum(pair(1, 2), 0.5).expect("in range");
            let high_12 = xi_min_sum(pair(1, 2), 1.0 / 3.0).expect("in range");
            let low_23 = xi_min_sum(pair(2, 3), 1.0 / 3.0).expect("in range");
            let high_23 = xi_min_sum(pair(2, 3), 0.0).expect("in range");
            vec![
                (pair(1, 2), MinSum::Interval(low_12, high_12)),
                (pair(2, 3), MinSum::Interval(low_23, high_23)),
            ]
        }
    }
}

/// The minimum variance sum over the population simplex: `z = 2s - s^2` with
/// `s = rho_ii + rho_jj`, invalid outside `s <= 1`.
pub fn min_sum_surface(grid_n: usize) -> ContourGrid {
    ContourGrid::evaluate(
        ["rho_ii", "rho_jj", "min_sum"],
        unit_linspace(grid_n),
        unit_linspace(grid_n),
        |pop_i, pop_j| {
            if pop_i + pop_j > 1.0 + 1e-12 {
                None
            } else {
                Some(min_uncertainty_sum(pop_i, pop_j).expect("simplex point"))
            }
        },
    )
}
