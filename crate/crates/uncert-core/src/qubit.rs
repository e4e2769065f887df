//! Qubit Bloch states, Pauli observables along arbitrary directions, and the
//! circular-quadrant uncertainty-region test.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::state::{DensityMatrix, Observable, UncertaintyReport};

/// Tolerance for the pairwise orthogonality precondition on observable
/// directions. Looser than the unit-norm tolerance because directions may
/// arrive from CLI text.
pub const TAU_ORTHO: f64 = 1e-10;

/// The mean-spin vector of a qubit state, `|r| <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    r1: f64,
    r2: f64,
    r3: f64,
}

impl BlochVector {
    pub fn new(r1: f64, r2: f64, r3: f64) -> Result<Self> {
        let norm_sq = r1 * r1 + r2 * r2 + r3 * r3;
        if norm_sq > 1.0 + 1e-12 {
            return Err(Error::BlochNormExceeded {
                norm: norm_sq.sqrt(),
            });
        }
        Ok(Self { r1, r2, r3 })
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    pub fn r2(&self) -> f64 {
        self.r2
    }

    pub fn r3(&self) -> f64 {
        self.r3
    }

    pub fn norm(&self) -> f64 {
        (self.r1 * self.r1 + self.r2 * self.r2 + self.r3 * self.r3).sqrt()
    }

    pub fn components(&self) -> [f64; 3] {
        [self.r1, self.r2, self.r3]
    }
}

/// A unit direction selecting the Pauli observable `sigma . a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliDirection {
    a1: f64,
    a2: f64,
    a3: f64,
}

impl PauliDirection {
    pub fn new(a1: f64, a2: f64, a3: f64) -> Result<Self> {
        let norm = (a1 * a1 + a2 * a2 + a3 * a3).sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnitVector { norm });
        }
        Ok(Self { a1, a2, a3 })
    }

    pub fn x() -> Self {
        Self {
            a1: 1.0,
            a2: 0.0,
            a3: 0.0,
        }
    }

    pub fn y() -> Self {
        Self {
            a1: 0.0,
            a2: 1.0,
            a3: 0.0,
        }
    }

    pub fn z() -> Self {
        Self {
            a1: 0.0,
            a2: 0.0,
            a3: 1.0,
        }
    }

    pub fn components(&self) -> [f64; 3] {
        [self.a1, self.a2, self.a3]
    }

    pub fn dot(&self, other: &PauliDirection) -> f64 {
        self.a1 * other.a1 + self.a2 * other.a2 + self.a3 * other.a3
    }

    pub fn dot_bloch(&self, r: &BlochVector) -> f64 {
        self.a1 * r.r1() + self.a2 * r.r2() + self.a3 * r.r3()
    }
}

/// Checks `a . b = 0` to [`TAU_ORTHO`].
pub fn require_orthogonal(a: &PauliDirection, b: &PauliDirection) -> Result<()> {
    let dot = a.dot(b);
    if dot.abs() > TAU_ORTHO {
        return Err(Error::NotOrthogonal { dot });
    }
    Ok(())
}

/// The Pauli matrix along axis `k` (1, 2 or 3).
pub fn pauli_matrix(k: usize) -> ComplexMatrix {
    match k {
        1 => ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]),
        2 => ComplexMatrix::from_vec(
            2,
            vec![
                Complex64::ZERO,
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                Complex64::ZERO,
            ],
        ),
        3 => ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0]),
        _ => panic!("Pauli axis must be 1, 2 or 3, got {k}"),
    }
}

/// The 2x2 combination `a1 sigma_1 + a2 sigma_2 + a3 sigma_3` for arbitrary
/// real coefficients.
pub(crate) fn pauli_combination(a1: f64, a2: f64, a3: f64) -> ComplexMatrix {
    ComplexMatrix::from_vec(
        2,
        vec![
            Complex64::new(a3, 0.0),
            Complex64::new(a1, -a2),
            Complex64::new(a1, a2),
            Complex64::new(-a3, 0.0),
        ],
    )
}

/// The qubit state `(I + r . sigma) / 2`; eigenvalues are `(1 +- |r|) / 2`.
pub fn bloch_to_density(r: &BlochVector) -> Result<DensityMatrix> {
    let mat = &ComplexMatrix::identity(2) + &pauli_combination(r.r1(), r.r2(), r.r3());
    DensityMatrix::new(mat.scale(0.5))
}

/// The observable `sigma . a` for a unit direction: Hermitian, traceless,
/// eigenvalues +-1, squares to the identity.
pub fn pauli_observable(direction: &PauliDirection) -> Observable {
    let [a1, a2, a3] = direction.components();
    Observable::new(pauli_combination(a1, a2, a3))
        .expect("Pauli combinations with real coefficients are Hermitian")
}

/// Variances of the orthogonal pair `(sigma.a, sigma.b)` in the state `r`,
/// computed in closed form: `1 - (a.r)^2` and `1 - (b.r)^2`.
pub fn qubit_variance_pair(
    r: &BlochVector,
    a: &PauliDirection,
    b: &PauliDirection,
) -> Result<UncertaintyReport> {
    require_orthogonal(a, b)?;
    let means = vec![a.dot_bloch(r), b.dot_bloch(r)];
    let seconds = vec![1.0, 1.0];
    Ok(UncertaintyReport::from_moments(means, seconds))
}

/// Membership test for the qubit uncertainty region in standard deviations:
/// `(d1, d2)` is attainable iff `d1^2 + d2^2 >= 1`.
///
/// The axes are standard deviations, not variances.
pub fn qubit_region_contains(d1: f64, d2: f64) -> Result<bool> {
    for (name, value) in [("d1", d1), ("d2", d2)] {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::OutOfRange {
                name,
                value,
                min: 0.0,
                max: 1.0,
            });
        }
    }
    Ok(d1 * d1 + d2 * d2 >= 1.0 - 1e-10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{sum_uncertainty, variance};

    #[test]
    fn bloch_origin_is_maximally_mixed() {
        let rho = bloch_to_density(&BlochVector::new(0.0, 0.0, 0.0).unwrap()).unwrap();
        assert!(rho
            .mat()
            .max_abs_diff(&ComplexMatrix::identity(2).scale(0.5))
            < 1e-15);
    }

    #[test]
    fn bloch_north_pole_is_projector() {
        let rho = bloch_to_density(&BlochVector::new(0.0, 0.0, 1.0).unwrap()).unwrap();
        assert!(rho.mat().max_abs_diff(&ComplexMatrix::diag(&[1.0, 0.0])) < 1e-15);
    }

    #[test]
    fn pure_bloch_state_has_rank_one() {
        let rho = bloch_to_density(&BlochVector::new(0.6, 0.0, 0.8).unwrap()).unwrap();
        let eigenvalues = crate::eigen::hermitian_eigenvalues(rho.mat()).unwrap();
        assert!(eigenvalues[0].abs() < 1e-14);
        assert!((eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn overlong_bloch_vector_is_rejected() {
        assert!(matches!(
            BlochVector::new(0.8, 0.8, 0.0),
            Err(Error::BlochNormExceeded { .. })
        ));
    }

    #[test]
    fn axis_directions_give_pauli_matrices() {
        assert!(pauli_observable(&PauliDirection::x())
            .mat()
            .max_abs_diff(&pauli_matrix(1))
            == 0.0);
        assert!(pauli_observable(&PauliDirection::z())
            .mat()
            .max_abs_diff(&pauli_matrix(3))
            == 0.0);
    }

    #[test]
    fn tilted_direction_squares_to_identity() {
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let obs = pauli_observable(&PauliDirection::new(inv_sqrt2, inv_sqrt2, 0.0).unwrap());
        let squared = obs.mat() * obs.mat();
        assert!(squared.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);
        assert!(obs.mat().trace().norm() < 1e-15);
    }

    #[test]
    fn non_unit_direction_is_rejected() {
        assert!(matches!(
            PauliDirection::new(1.0, 1.0, 0.0),
            Err(Error::NotUnitVector { .. })
        ));
    }

    #[test]
    fn variance_pair_saturates_at_aligned_pure_state() {
        let r = BlochVector::new(1.0, 0.0, 0.0).unwrap();
        let report = qubit_variance_pair(&r, &PauliDirection::x(), &PauliDirection::y()).unwrap();
        assert_eq!(report.variances, vec![0.0, 1.0]);
        assert_eq!(report.sum_of_variances, 1.0);
    }

    #[test]
    fn variance_pair_on_mixed_state_is_two() {
        let r = BlochVector::new(0.0, 0.0, 0.0).unwrap();
        let report = qubit_variance_pair(&r, &PauliDirection::x(), &PauliDirection::y()).unwrap();
        assert_eq!(report.variances, vec![1.0, 1.0]);
        assert_eq!(report.sum_of_variances, 2.0);
    }

    #[test]
    fn variance_pair_matches_closed_form() {
        let r = BlochVector::new(0.3, 0.4, 0.5).unwrap();
        let report = qubit_variance_pair(&r, &PauliDirection::x(), &PauliDirection::y()).unwrap();
        assert!((report.variances[0] - 0.91).abs() < 1e-15);
        assert!((report.variances[1] - 0.84).abs() < 1e-15);
        assert!((report.sum_of_variances - 1.75).abs() < 1e-15);
    }

    #[test]
    fn variance_pair_agrees_with_trace_route() {
        let r = BlochVector::new(0.3, 0.4, 0.5).unwrap();
        let rho = bloch_to_density(&r).unwrap();
        let report = qubit_variance_pair(&r, &PauliDirection::x(), &PauliDirection::y()).unwrap();
        let direct = sum_uncertainty(
            &rho,
            &[
                pauli_observable(&PauliDirection::x()),
                pauli_observable(&PauliDirection::y()),
            ],
        )
        .unwrap();
        for k in 0..2 {
            assert!((report.variances[k] - direct.variances[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn non_orthogonal_pair_is_rejected() {
        let r = BlochVector::new(0.0, 0.0, 0.0).unwrap();
        let tilted = PauliDirection::new(
            std::f64::consts::FRAC_1_SQRT_2,
            std::f64::consts::FRAC_1_SQRT_2,
            0.0,
        )
        .unwrap();
        assert!(matches!(
            qubit_variance_pair(&r, &PauliDirection::x(), &tilted),
            Err(Error::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn region_membership_cases() {
        assert!(qubit_region_contains(1.0, 1.0).unwrap());
        assert!(!qubit_region_contains(0.5, 0.5).unwrap());
        // Boundary point on the unit circle.
        assert!(qubit_region_contains(0.6, 0.8).unwrap());
        assert!(matches!(
            qubit_region_contains(1.2, 0.0),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn formula_and_trace_variance_agree_for_z_axis() {
        let r = BlochVector::new(0.2, -0.3, 0.4).unwrap();
        let rho = bloch_to_density(&r).unwrap();
        let var_z = variance(&rho, &pauli_observable(&PauliDirection::z())).unwrap();
        assert!((var_z - (1.0 - 0.16)).abs() < 1e-14);
    }
}
