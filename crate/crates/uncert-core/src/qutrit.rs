//! The appended-level qutrit family: a qubit pure state plus an ancillary
//! third level carrying the remaining population.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::qubit::{pauli_combination, require_orthogonal, BlochVector, PauliDirection};
use crate::state::{DensityMatrix, Observable, UncertaintyReport};

/// The state `omega |psi><psi| (+) (1 - omega)`: a pure qubit state with unit
/// mean-spin vector `r`, diluted by an ancillary level of population
/// `1 - omega`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppendedQutrit {
    omega: f64,
    r: BlochVector,
}

impl AppendedQutrit {
    pub fn new(omega: f64, r: BlochVector) -> Result<Self> {
        if !(0.0..=1.0).contains(&omega) {
            return Err(Error::InvalidOmega { omega });
        }
        let norm = r.norm();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnitBloch { norm });
        }
        Ok(Self { omega, r })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn r(&self) -> &BlochVector {
        &self.r
    }

    /// The explicit 3x3 density matrix: a rank-1 qubit block of trace `omega`
    /// and the ancillary population on the diagonal.
    pub fn density(&self) -> DensityMatrix {
        let (omega, [r1, r2, r3]) = (self.omega, self.r.components());
        let mut mat = ComplexMatrix::zeros(3);
        mat[(0, 0)] = Complex64::new(omega * (1.0 + r3) / 2.0, 0.0);
        mat[(0, 1)] = Complex64::new(omega * r1 / 2.0, -omega * r2 / 2.0);
        mat[(1, 0)] = Complex64::new(omega * r1 / 2.0, omega * r2 / 2.0);
        mat[(1, 1)] = Complex64::new(omega * (1.0 - r3) / 2.0, 0.0);
        mat[(2, 2)] = Complex64::new(1.0 - omega, 0.0);
        DensityMatrix::new(mat).expect("appended-level matrices are valid states by construction")
    }
}

/// Builds the 3x3 density matrix for an appended-level qutrit.
pub fn appended_qutrit_density(qutrit: &AppendedQutrit) -> DensityMatrix {
    qutrit.density()
}

/// The observable `sigma . a (+) 0`: the qubit Pauli in the upper-left block,
/// zero on the ancillary level.
pub fn embedded_observable(direction: &PauliDirection) -> Observable {
    let [a1, a2, a3] = direction.components();
    let block = pauli_combination(a1, a2, a3);
    let mut mat = ComplexMatrix::zeros(3);
    for i in 0..2 {
        for j in 0..2 {
            mat[(i, j)] = block[(i, j)];
        }
    }
    Observable::new(mat).expect("embedded Pauli combinations are Hermitian")
}

/// Closed-form variances of the embedded orthogonal pair: both second moments
/// equal `omega`, and the variances are `omega - omega^2 (a.r)^2` and
/// `omega - omega^2 (b.r)^2`.
pub fn qutrit_variance_pair(
    qutrit: &AppendedQutrit,
    a: &PauliDirection,
    b: &PauliDirection,
) -> Result<UncertaintyReport> {
    require_orthogonal(a, b)?;
    let omega = qutrit.omega();
    let means = vec![
        omega * a.dot_bloch(qutrit.r()),
        omega * b.dot_bloch(qutrit.r()),
    ];
    let seconds = vec![omega, omega];
    Ok(UncertaintyReport::from_moments(means, seconds))
}

/// The lower boundary of the qutrit uncertainty region: for a fixed standard
/// deviation `d1` of the first observable, the least attainable standard
/// deviation of the second is `d1 sqrt(1 - d1^2)`.
pub fn qutrit_boundary_min(d1: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&d1) {
        return Err(Error::OutOfRange {
            name: "d1",
            value: d1,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(d1 * (1.0 - d1 * d1).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::sum_uncertainty;

    fn x_hat() -> PauliDirection {
        PauliDirection::x()
    }

    fn y_hat() -> PauliDirection {
        PauliDirection::y()
    }

    #[test]
    fn full_weight_north_pole_is_upper_projector() {
        let q = AppendedQutrit::new(1.0, BlochVector::new(0.0, 0.0, 1.0).unwrap()).unwrap();
        assert!(q
            .density()
            .mat()
            .max_abs_diff(&ComplexMatrix::diag(&[1.0, 0.0, 0.0]))
            < 1e-15);
    }

    #[test]
    fn zero_weight_puts_population_on_ancilla() {
        let q = AppendedQutrit::new(0.0, BlochVector::new(1.0, 0.0, 0.0).unwrap()).unwrap();
        assert!(q
            .density()
            .mat()
            .max_abs_diff(&ComplexMatrix::diag(&[0.0, 0.0, 1.0]))
            < 1e-15);
    }

    #[test]
    fn half_weight_x_state_matrix() {
        let q = AppendedQutrit::new(0.5, BlochVector::new(1.0, 0.0, 0.0).unwrap()).unwrap();
        let expected = ComplexMatrix::from_real(
            3,
            &[0.25, 0.25, 0.0, 0.25, 0.25, 0.0, 0.0, 0.0, 0.5],
        );
        assert!(q.density().mat().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let unit = BlochVector::new(0.0, 0.0, 1.0).unwrap();
        assert!(matches!(
            AppendedQutrit::new(1.5, unit),
            Err(Error::InvalidOmega { .. })
        ));
        let short = BlochVector::new(0.5, 0.0, 0.0).unwrap();
        assert!(matches!(
            AppendedQutrit::new(0.5, short),
            Err(Error::NotUnitBloch { .. })
        ));
    }

    #[test]
    fn embedded_observable_block_structure() {
        let obs = embedded_observable(&x_hat());
        let expected =
            ComplexMatrix::from_real(3, &[0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(obs.mat().max_abs_diff(&expected) == 0.0);

        // A^2 = I_2 (+) 0 for any unit direction.
        let tilted = PauliDirection::new(0.6, 0.0, 0.8).unwrap();
        let squared = embedded_observable(&tilted).mat() * embedded_observable(&tilted).mat();
        assert!(squared.max_abs_diff(&ComplexMatrix::diag(&[1.0, 1.0, 0.0])) < 1e-15);
    }

    #[test]
    fn origin_is_attained_at_zero_weight() {
        let q = AppendedQutrit::new(0.0, BlochVector::new(0.0, 1.0, 0.0).unwrap()).unwrap();
        let report = qutrit_variance_pair(&q, &x_hat(), &y_hat()).unwrap();
        assert_eq!(report.variances, vec![0.0, 0.0]);
    }

    #[test]
    fn qubit_limit_recovers_eigenstate_variances() {
        let q = AppendedQutrit::new(1.0, BlochVector::new(1.0, 0.0, 0.0).unwrap()).unwrap();
        let report = qutrit_variance_pair(&q, &x_hat(), &y_hat()).unwrap();
        assert_eq!(report.variances, vec![0.0, 1.0]);
    }

    #[test]
    fn half_weight_aligned_state_variances() {
        let q = AppendedQutrit::new(0.5, BlochVector::new(1.0, 0.0, 0.0).unwrap()).unwrap();
        let report = qutrit_variance_pair(&q, &x_hat(), &y_hat()).unwrap();
        assert!((report.variances[0] - 0.25).abs() < 1e-15);
        assert!((report.variances[1] - 0.5).abs() < 1e-15);
        assert_eq!(report.second_moments, vec![0.5, 0.5]);
    }

    #[test]
    fn formula_agrees_with_trace_route() {
        let q = AppendedQutrit::new(0.73, BlochVector::new(0.48, -0.6, 0.64).unwrap()).unwrap();
        let report = qutrit_variance_pair(&q, &x_hat(), &y_hat()).unwrap();
        let direct = sum_uncertainty(
            &q.density(),
            &[embedded_observable(&x_hat()), embedded_observable(&y_hat())],
        )
        .unwrap();
        for k in 0..2 {
            assert!((report.means[k] - direct.means[k]).abs() < 1e-12);
            assert!((report.second_moments[k] - direct.second_moments[k]).abs() < 1e-12);
            assert!((report.variances[k] - direct.variances[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn boundary_curve_values() {
        assert_eq!(qutrit_boundary_min(0.0).unwrap(), 0.0);
        assert_eq!(qutrit_boundary_min(1.0).unwrap(), 0.0);
        // Frozen from the constrained grid search over (omega, r):
        // at d1 = 1/2 the least d2 is (1/2) sqrt(3/4).
        assert!((qutrit_boundary_min(0.5).unwrap() - 0.433_012_701_892_219_3).abs() < 1e-15);
        assert!(matches!(
            qutrit_boundary_min(1.5),
            Err(Error::OutOfRange { .. })
        ));
    }
}
