//! Variance-based sum uncertainty relations and uncertainty regions for
//! qubits, qutrits and 3-level atomic systems.
//!
//! The crate provides:
//!
//! - **State foundation**: small complex matrices, validated density matrices
//!   and Hermitian observables, expectation values, variances, the Robertson
//!   product bound and variance-sum reports ([`matrix`], [`state`], [`eigen`]).
//! - **Qubit uncertainty**: Bloch states, orthogonal Pauli observables along
//!   arbitrary directions, and the circular-quadrant region test ([`qubit`]).
//! - **Qutrit uncertainty**: the appended-level family `ω|ψ⟩⟨ψ| ⊕ (1−ω)`, its
//!   embedded observables and the region boundary curve ([`qutrit`]).
//! - **3-level atomic systems**: Pauli-like subspace operators, the
//!   uncertainty-sum minimum in level populations, and Λ/V/Ξ steady-state
//!   presets ([`atomic`]).
//! - **Symmetric two-qubit map**: the coupled/uncoupled basis unitary, the
//!   qutrit ↔ permutation-symmetric two-qubit correspondence and its
//!   transformed observables ([`symmetric`]).
//! - **Entanglement**: Wootters concurrence (eigenvalue and X-state routes),
//!   the closed form in `(ω, κ)`, and the separable-state bound 3/4
//!   ([`entanglement`]).
//! - **Region sampling**: seeded scatter sets and contour grids backing the
//!   CLI and the browser demo ([`region`], [`sample`]).
//! - **Verification suites**: the runtime property checks behind
//!   `uncert verify` ([`verify`]).
//!
//! All operations are pure functions of their inputs; every value is immutable
//! after construction and safe to share across threads.

pub mod atomic;
pub mod eigen;
pub mod entanglement;
mod error;
pub mod matrix;
pub mod qubit;
pub mod qutrit;
pub mod region;
pub mod sample;
pub mod state;
pub mod symmetric;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::ComplexMatrix;
pub use state::{
    expectation, robertson_bound, sum_uncertainty, variance, DensityMatrix, Observable,
    UncertaintyReport, TAU_HERM, TAU_PSD, TAU_TRACE,
};

pub use atomic::{
    atomic_uncertainty_sum, min_sum_surface, min_uncertainty_sum, preset_min_sums, sigma_ij,
    subspace_bloch, AtomicPreset, MinSum, SubspaceBlochVector, SubspacePair,
};
pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use entanglement::{
    concurrence_general, concurrence_kappa_omega, concurrence_x_state, separable_bound_oracle,
    separable_component_sum, separable_mixture_report, separable_state, separable_uncertainty_sum,
    ConcurrenceResult, SeparableEnsemble,
};
pub use qubit::{
    bloch_to_density, pauli_observable, qubit_region_contains, qubit_variance_pair, BlochVector,
    PauliDirection,
};
pub use qutrit::{
    embedded_observable, qutrit_boundary_min, qutrit_variance_pair, AppendedQutrit,
};
pub use region::{
    contour_concurrence, contour_sum, sample_qubit_region, sample_qutrit_region, ContourGrid,
    RegionPoint, RegionTag,
};
pub use sample::{fibonacci_sphere, sample_qubit_state, BlochSampler, SampleMode};
pub use symmetric::{
    coupling_unitary, extract_params, qutrit_to_two_qubit, transformed_observables,
    two_qubit_uncertainty, uncertainty_sum_kappa, KappaOmega, SymmetricTwoQubitParams,
};
