//! Two-qubit entanglement via Wootters concurrence, and the variance-sum
//! bound 3/4 for permutation-symmetric separable states.

use serde::{Deserialize, Serialize};

use crate::eigen::hermitian_eigen;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::qubit::pauli_combination;
use crate::state::{sum_uncertainty, DensityMatrix, UncertaintyReport};
use crate::symmetric::{transformed_observables, KappaOmega};

/// Concurrence with the spin-flip spectrum that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConcurrenceResult {
    /// `max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4))`, in `[0, 1]`.
    pub value: f64,
    /// Eigenvalues of `rho rho_tilde`, descending and nonnegative.
    pub lambdas: [f64; 4],
}

/// Wootters concurrence of an arbitrary two-qubit state.
///
/// The eigenvalues of the non-Hermitian product `rho rho_tilde` (with
/// `rho_tilde = (σy⊗σy) conj(rho) (σy⊗σy)`) equal those of the Hermitian
/// matrix `sqrt(rho) rho_tilde sqrt(rho)`, so only Hermitian
/// eigendecompositions are needed.
pub fn concurrence_general(rho: &DensityMatrix) -> Result<ConcurrenceResult> {
    if rho.dim() != 4 {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: 4,
        });
    }
    let spin_flip = pauli_combination(0.0, 1.0, 0.0).kron(&pauli_combination(0.0, 1.0, 0.0));
    let tilde = &(&spin_flip * &rho.mat().conj()) * &spin_flip;

    let eig = hermitian_eigen(rho.mat())?;
    let sqrt_diag =
        ComplexMatrix::diag(&eig.values.iter().map(|&v| v.max(0.0).sqrt()).collect::<Vec<_>>());
    let sqrt_rho = &(&eig.vectors * &sqrt_diag) * &eig.vectors.adjoint();

    let product = &(&sqrt_rho * &tilde) * &sqrt_rho;
    // Hermitize away the round-off before decomposing.
    let symmetric = ComplexMatrix::from_fn(4, |i, j| {
        (product[(i, j)] + product[(j, i)].conj()) * 0.5
    });
    let mut lambdas = hermitian_eigen(&symmetric)?.values;
    lambdas.reverse();

    let worst = lambdas.iter().cloned().fold(0.0f64, |acc, v| acc.min(v));
    if worst < -1e-9 {
        return Err(Error::EigenFailure { residual: -worst });
    }
    // Eigenvalues carry absolute round-off of order 1e-14 * lambda_max; the
    // square root would amplify that noise on structural zeros to ~1e-7, so
    // everything below a relative floor counts as zero.
    let floor = 1e-12 * lambdas[0].max(0.0);
    let clamped: Vec<f64> = lambdas
        .iter()
        .map(|&v| if v < floor { 0.0 } else { v })
        .collect();
    let roots: Vec<f64> = clamped.iter().map(|&v| v.sqrt()).collect();
    let value = (roots[0] - roots[1] - roots[2] - roots[3]).clamp(0.0, 1.0);
    Ok(ConcurrenceResult {
        value,
        lambdas: [clamped[0], clamped[1], clamped[2], clamped[3]],
    })
}

const TAU_X_PATTERN: f64 = 1e-12;

/// Closed-form concurrence for X-patterned states (nonzero entries only on
/// the main diagonal and anti-diagonal):
/// `2 max(0, |rho_14| - sqrt(rho_22 rho_33), |rho_23| - sqrt(rho_11 rho_44))`.
pub fn concurrence_x_state(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: 4,
        });
    }
    for i in 0..4 {
        for j in 0..4 {
            if i == j || i + j == 3 {
                continue;
            }
            let value = rho.mat()[(i, j)].norm();
            if value > TAU_X_PATTERN {
                return Err(Error::NotXState {
                    row: i + 1,
                    col: j + 1,
                    value,
                });
            }
        }
    }
    let diag = |k: usize| rho.mat()[(k, k)].re.max(0.0);
    let outer = rho.mat()[(0, 3)].norm() - (diag(1) * diag(2)).sqrt();
    let inner = rho.mat()[(1, 2)].norm() - (diag(0) * diag(3)).sqrt();
    Ok(2.0 * outer.max(inner).max(0.0))
}

/// Concurrence of the mapped qutrit state in closed form: `|ω(1+κ) - 1|`.
pub fn concurrence_kappa_omega(ko: &KappaOmega) -> f64 {
    (ko.omega() * (1.0 + ko.kappa()) - 1.0).abs()
}

/// A convex mixture of identical pure product states: terms
/// `(p_i, s_i)` with unit vectors `s_i`, probabilities summing to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparableEnsemble {
    terms: Vec<(f64, [f64; 3])>,
}

impl SeparableEnsemble {
    pub fn new(terms: Vec<(f64, [f64; 3])>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidEnsemble {
                reason: "ensemble has no terms".to_string(),
            });
        }
        let mut total = 0.0;
        for (index, (weight, direction)) in terms.iter().enumerate() {
            if *weight < 0.0 {
                return Err(Error::InvalidEnsemble {
                    reason: format!("term {index} has negative probability {weight}"),
                });
            }
            let norm =
                (direction[0].powi(2) + direction[1].powi(2) + direction[2].powi(2)).sqrt();
            if (norm - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidEnsemble {
                    reason: format!("term {index} direction has norm {norm}, expected 1"),
                });
            }
            total += weight;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidEnsemble {
                reason: format!("probabilities sum to {total}, expected 1"),
            });
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[(f64, [f64; 3])] {
        &self.terms
    }
}

/// The symmetric separable state `Σ p_i (ρ_i ⊗ ρ_i)` with pure constituents
/// `ρ_i = (I + σ.s_i) / 2`.
pub fn separable_state(ensemble: &SeparableEnsemble) -> DensityMatrix {
    let mut mat = ComplexMatrix::zeros(4);
    for (weight, s) in ensemble.terms() {
        let single = (&ComplexMatrix::identity(2) + &pauli_combination(s[0], s[1], s[2])).scale(0.5);
        mat = &mat + &single.kron(&single).scale(*weight);
    }
    DensityMatrix::new(mat).expect("convex mixtures of product states are valid states")
}

/// Variance sum of the transformed observable pair on one pure product
/// component, as a function of its z-component: `3/4 + (3/2) s3^2 - s3^4 / 4`.
pub fn separable_component_sum(s3: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&s3) {
        return Err(Error::OutOfRange {
            name: "s3",
            value: s3,
            min: -1.0,
            max: 1.0,
        });
    }
    let squared = s3 * s3;
    Ok(0.75 + 1.5 * squared - 0.25 * squared * squared)
}

/// The probability-weighted component variance sum
/// `3/4 + (3/2) Σ p_i s3_i^2 - (1/4) Σ p_i s3_i^4`; never below 3/4.
///
/// This is the per-component convention: it averages the constituent
/// variances and omits the nonnegative mean-dispersion terms of the mixture.
/// [`separable_mixture_report`] exposes the full mixture variances for
/// comparison.
pub fn separable_uncertainty_sum(ensemble: &SeparableEnsemble) -> f64 {
    let mut second = 0.0;
    let mut fourth = 0.0;
    for (weight, s) in ensemble.terms() {
        let z_squared = s[2] * s[2];
        second += weight * z_squared;
        fourth += weight * z_squared * z_squared;
    }
    0.75 + 1.5 * second - 0.25 * fourth
}

/// True mixture variances of the transformed observables on the assembled
/// separable state. Dominates [`separable_uncertainty_sum`] because mixing
/// adds mean-dispersion.
pub fn separable_mixture_report(ensemble: &SeparableEnsemble) -> UncertaintyReport {
    let rho = separable_state(ensemble);
    let (first, second) = transformed_observables();
    sum_uncertainty(&rho, &[first, second]).expect("dimensions match by construction")
}

/// Brute-force minimum of [`separable_component_sum`] over an evenly spaced
/// grid on `[lo, hi]`.
pub fn separable_bound_oracle_on(grid_n: usize, lo: f64, hi: f64) -> f64 {
    assert!(grid_n >= 2, "oracle grid needs at least two points");
    (0..grid_n)
        .map(|k| {
            let s3 = lo + (hi - lo) * k as f64 / (grid_n - 1) as f64;
            separable_component_sum(s3).expect("grid stays in range")
        })
        .fold(f64::INFINITY, f64::min)
}

/// Brute-force minimum over the full range `[-1, 1]`; equals 3/4 at `s3 = 0`.
pub fn separable_bound_oracle(grid_n: usize) -> f64 {
    separable_bound_oracle_on(grid_n, -1.0, 1.0)
}
