//! The correspondence between an appended-level qutrit and a permutation
//! symmetric two-qubit state.
//!
//! Basis ordering is a file-format commitment: the product (uncoupled) basis
//! is `|++>, |+->, |-+>, |-->` in spin-z labels, and the collective
//! (coupled) basis slots are `|11>, |1-1>, |10>, |00>` to match the rows of
//! the transformation unitary. The qutrit embeds on the first three coupled
//! slots, with the singlet slot zero.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::qubit::pauli_matrix;
use crate::qutrit::AppendedQutrit;
use crate::state::{DensityMatrix, Observable, UncertaintyReport};

/// The change of basis between collective and product bases. Its rows are
/// the coupled states written in product coordinates; `U^dagger U = I`.
pub fn coupling_unitary() -> ComplexMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_real(
        4,
        &[
            1.0, 0.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, 1.0, //
            0.0, h, h, 0.0, //
            0.0, h, -h, 0.0,
        ],
    )
}

/// The SWAP operator on the product basis.
pub fn swap_matrix() -> ComplexMatrix {
    ComplexMatrix::from_real(
        4,
        &[
            1.0, 0.0, 0.0, 0.0, //
            0.0, 0.0, 1.0, 0.0, //
            0.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, 1.0,
        ],
    )
}

/// The qutrit written as a 4x4 state on the coupled slots (fourth row and
/// column zero).
pub fn embedded_qutrit(qutrit: &AppendedQutrit) -> DensityMatrix {
    let block = qutrit.density();
    let mat = ComplexMatrix::from_fn(4, |i, j| {
        if i < 3 && j < 3 {
            block.mat()[(i, j)]
        } else {
            Complex64::ZERO
        }
    });
    DensityMatrix::new(mat).expect("embedding preserves the state invariants")
}

/// The permutation-symmetric two-qubit state equivalent to the qutrit, in
/// closed form: pure-block corners `(1 +- r3) ω / 2` and `(r1 -+ i r2) ω / 2`,
/// and a constant middle block `(1 - ω) / 2`.
///
/// Equals the similarity transform of [`embedded_qutrit`] by
/// [`coupling_unitary`].
pub fn qutrit_to_two_qubit(qutrit: &AppendedQutrit) -> DensityMatrix {
    let (omega, [r1, r2, r3]) = (qutrit.omega(), qutrit.r().components());
    let half_rest = (1.0 - omega) / 2.0;
    let mut mat = ComplexMatrix::zeros(4);
    mat[(0, 0)] = Complex64::new((1.0 + r3) * omega / 2.0, 0.0);
    mat[(0, 3)] = Complex64::new(r1 * omega / 2.0, -r2 * omega / 2.0);
    mat[(3, 0)] = Complex64::new(r1 * omega / 2.0, r2 * omega / 2.0);
    mat[(3, 3)] = Complex64::new((1.0 - r3) * omega / 2.0, 0.0);
    for i in 1..3 {
        for j in 1..3 {
            mat[(i, j)] = Complex64::new(half_rest, 0.0);
        }
    }
    DensityMatrix::new(mat).expect("the mapped matrix is a valid state by construction")
}

/// The `(s, t)` parametrization of a permutation-symmetric two-qubit state:
/// `rho = (I⊗I + Σ s_i (σ_i⊗I + I⊗σ_i) + Σ t_ij σ_i⊗σ_j) / 4` with
/// symmetric `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetricTwoQubitParams {
    pub s: [f64; 3],
    pub t: [[f64; 3]; 3],
}

impl SymmetricTwoQubitParams {
    /// Rebuilds the density matrix from the parameters.
    pub fn reconstruct(&self) -> Result<DensityMatrix> {
        let identity = ComplexMatrix::identity(2);
        let mut mat = ComplexMatrix::identity(4);
        for i in 0..3 {
            let sigma = pauli_matrix(i + 1);
            let symmetrized = &sigma.kron(&identity) + &identity.kron(&sigma);
            mat = &mat + &symmetrized.scale(self.s[i]);
            for j in 0..3 {
                let product = sigma.kron(&pauli_matrix(j + 1));
                mat = &mat + &product.scale(self.t[i][j]);
            }
        }
        DensityMatrix::new(mat.scale(0.25))
    }
}

const TAU_SYMMETRY: f64 = 1e-10;

/// Reads the `(s, t)` parameters off a permutation-symmetric state via the
/// Pauli traces `s_i = Tr[rho (σ_i⊗I)]`, `t_ij = Tr[rho (σ_i⊗σ_j)]`.
pub fn extract_params(rho: &DensityMatrix) -> Result<SymmetricTwoQubitParams> {
    if rho.dim() != 4 {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: 4,
        });
    }
    let swap = swap_matrix();
    let swapped = &(&swap * rho.mat()) * &swap;
    let residual = swapped.max_abs_diff(rho.mat());
    if residual > TAU_SYMMETRY {
        return Err(Error::NotSymmetricState { residual });
    }

    let identity = ComplexMatrix::identity(2);
    let trace_with = |op: &ComplexMatrix| -> f64 {
        let value = (rho.mat() * op).trace();
        debug_assert!(value.im.abs() < 1e-12);
        value.re
    };

    let s = std::array::from_fn(|i| trace_with(&pauli_matrix(i + 1).kron(&identity)));
    let mut t: [[f64; 3]; 3] = std::array::from_fn(|i| {
        let sigma = pauli_matrix(i + 1);
        std::array::from_fn(|j| trace_with(&sigma.kron(&pauli_matrix(j + 1))))
    });
    // Permutation symmetry makes t mathematically symmetric; average away
    // the round-off so the returned matrix is exactly so.
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let mean = 0.5 * (t[i][j] + t[j][i]);
        t[i][j] = mean;
        t[j][i] = mean;
    }
    Ok(SymmetricTwoQubitParams { s, t })
}

/// The two-qubit images of the embedded qubit observables along x and y:
/// `(σ1⊗σ1 - σ2⊗σ2) / 2` and `(σ1⊗σ2 + σ2⊗σ1) / 2`.
pub fn transformed_observables() -> (Observable, Observable) {
    let mut first = ComplexMatrix::zeros(4);
    first[(0, 3)] = Complex64::ONE;
    first[(3, 0)] = Complex64::ONE;
    let mut second = ComplexMatrix::zeros(4);
    second[(0, 3)] = Complex64::new(0.0, -1.0);
    second[(3, 0)] = Complex64::new(0.0, 1.0);
    (
        Observable::new(first).expect("Hermitian by construction"),
        Observable::new(second).expect("Hermitian by construction"),
    )
}

/// Closed-form moments of the transformed observables on the mapped state:
/// means `(ω r1, ω r2)`, second moments `(ω, ω)`. Identical to the qutrit
/// variance report for the same parameters.
pub fn two_qubit_uncertainty(qutrit: &AppendedQutrit) -> UncertaintyReport {
    let (omega, [r1, r2, _]) = (qutrit.omega(), qutrit.r().components());
    UncertaintyReport::from_moments(vec![omega * r1, omega * r2], vec![omega, omega])
}

/// The `(ω, κ)` coordinates of a mapped state, with
/// `κ = sqrt(r1^2 + r2^2) = sqrt(1 - r3^2)` for the source qutrit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KappaOmega {
    omega: f64,
    kappa: f64,
}

impl KappaOmega {
    pub fn new(omega: f64, kappa: f64) -> Result<Self> {
        for (name, value) in [("omega", omega), ("kappa", kappa)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::OutOfRange {
                    name,
                    value,
                    min: 0.0,
                    max: 1.0,
                });
            }
        }
        Ok(Self { omega, kappa })
    }

    pub fn from_qutrit(qutrit: &AppendedQutrit) -> Self {
        let [r1, r2, _] = qutrit.r().components();
        Self {
            omega: qutrit.omega(),
            kappa: (r1 * r1 + r2 * r2).sqrt().min(1.0),
        }
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }
}

/// The two-qubit variance sum in the `(ω, κ)` coordinates: `2ω - ω²κ²`.
pub fn uncertainty_sum_kappa(ko: &KappaOmega) -> f64 {
    2.0 * ko.omega() - ko.omega().powi(2) * ko.kappa().powi(2)
}
