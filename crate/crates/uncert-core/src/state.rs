//! Validated quantum states and observables, and the generic variance
//! machinery built on them.

use serde::{Deserialize, Serialize};

use crate::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Hermiticity tolerance for state and observable construction.
pub const TAU_HERM: f64 = 1e-12;
/// Unit-trace tolerance for density matrices.
pub const TAU_TRACE: f64 = 1e-12;
/// Positive-semidefiniteness slack: eigenvalues may dip to `-TAU_PSD`.
pub const TAU_PSD: f64 = 1e-10;

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates the three state invariants and wraps the matrix.
    ///
    /// Each failure names the violated invariant and the measured residual.
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        let herm = mat.hermiticity_residual();
        if herm > TAU_HERM {
            return Err(Error::NotHermitian {
                residual: herm,
                tol: TAU_HERM,
            });
        }
        let trace = mat.trace();
        let trace_residual = (trace - num_complex::Complex64::ONE).norm();
        if trace_residual > TAU_TRACE {
            return Err(Error::TraceNotOne {
                residual: trace_residual,
                tol: TAU_TRACE,
            });
        }
        let eigenvalues = hermitian_eigenvalues(&mat)?;
        let min_eigenvalue = eigenvalues[0];
        if min_eigenvalue < -TAU_PSD {
            return Err(Error::NotPsd {
                min_eigenvalue,
                tol: TAU_PSD,
            });
        }
        Ok(Self { mat })
    }

    pub fn mat(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }
}

/// A Hermitian measurement operator.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    mat: ComplexMatrix,
}

impl Observable {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        let herm = mat.hermiticity_residual();
        if herm > TAU_HERM {
            return Err(Error::NotHermitian {
                residual: herm,
                tol: TAU_HERM,
            });
        }
        Ok(Self { mat })
    }

    pub fn mat(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }
}

/// Per-observable moments and the variance sum for one state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UncertaintyReport {
    pub means: Vec<f64>,
    pub second_moments: Vec<f64>,
    pub variances: Vec<f64>,
    pub sum_of_variances: f64,
}

impl UncertaintyReport {
    /// Builds a report from raw moments, clamping round-off negatives in
    /// `[-TAU_PSD, 0)` to zero so downstream square roots stay defined.
    ///
    /// Panics when a variance is below `-TAU_PSD`; that cannot happen for
    /// moments computed from a valid state and observable.
    pub fn from_moments(means: Vec<f64>, second_moments: Vec<f64>) -> Self {
        assert_eq!(means.len(), second_moments.len());
        let variances: Vec<f64> = means
            .iter()
            .zip(&second_moments)
            .map(|(&mean, &second)| clamp_variance(second - mean * mean))
            .collect();
        let sum_of_variances = variances.iter().sum();
        Self {
            means,
            second_moments,
            variances,
            sum_of_variances,
        }
    }
}

fn clamp_variance(v: f64) -> f64 {
    assert!(
        v >= -TAU_PSD,
        "variance {v} below -{TAU_PSD}: inputs violate state invariants"
    );
    if v < 0.0 {
        0.0
    } else {
        v
    }
}

fn check_dims(rho: &DensityMatrix, observable: &Observable) -> Result<()> {
    if rho.dim() != observable.dim() {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: observable.dim(),
        });
    }
    Ok(())
}

/// Expectation value `Tr(rho A)`.
///
/// The trace of a Hermitian-pair product is real; the imaginary residual is
/// asserted below 1e-12.
pub fn expectation(rho: &DensityMatrix, observable: &Observable) -> Result<f64> {
    check_dims(rho, observable)?;
    let value = (rho.mat() * observable.mat()).trace();
    assert!(
        value.im.abs() < 1e-12,
        "expectation trace has imaginary residual {}",
        value.im
    );
    Ok(value.re)
}

/// Variance `<A^2> - <A>^2`, clamped to zero within `[-TAU_PSD, 0)`.
pub fn variance(rho: &DensityMatrix, observable: &Observable) -> Result<f64> {
    check_dims(rho, observable)?;
    let mean = expectation(rho, observable)?;
    let squared = Observable::new(observable.mat() * observable.mat())
        .expect("square of a Hermitian matrix is Hermitian");
    let second = expectation(rho, &squared)?;
    Ok(clamp_variance(second - mean * mean))
}

/// Moments and variance sum for a list of observables measured on one state.
pub fn sum_uncertainty(rho: &DensityMatrix, observables: &[Observable]) -> Result<UncertaintyReport> {
    if observables.is_empty() {
        return Err(Error::EmptyObservableList);
    }
    let mut means = Vec::with_capacity(observables.len());
    let mut seconds = Vec::with_capacity(observables.len());
    for observable in observables {
        check_dims(rho, observable)?;
        means.push(expectation(rho, observable)?);
        let squared = Observable::new(observable.mat() * observable.mat())
            .expect("square of a Hermitian matrix is Hermitian");
        seconds.push(expectation(rho, &squared)?);
    }
    Ok(UncertaintyReport::from_moments(means, seconds))
}

/// Robertson product bound: returns
/// `(lhs, rhs) = (ΔA1 * ΔA2, |<[A1, A2]>| / 2)`; `lhs >= rhs` up to round-off
/// for any valid state.
pub fn robertson_bound(
    rho: &DensityMatrix,
    first: &Observable,
    second: &Observable,
) -> Result<(f64, f64)> {
    check_dims(rho, first)?;
    check_dims(rho, second)?;
    let lhs = (variance(rho, first)? * variance(rho, second)?).sqrt();
    let commutator = &(first.mat() * second.mat()) - &(second.mat() * first.mat());
    let rhs = 0.5 * (rho.mat() * &commutator).trace().norm();
    Ok((lhs, rhs))
}
