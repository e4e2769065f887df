//! Runtime property suites behind `uncert verify`.
//!
//! Each suite replays the module invariants on seeded random draws and
//! reports per-check pass/fail. The draws use dedicated ChaCha streams, so a
//! fixed seed reproduces the identical report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use num_complex::Complex64;

use crate::atomic::{
    atomic_uncertainty_sum, min_uncertainty_sum, optimal_frame, preset_min_sums, sigma_ij,
    subspace_bloch, AtomicPreset, MinSum, SubspacePair,
};
use crate::eigen::hermitian_eigenvalues;
use crate::entanglement::{
    concurrence_general, concurrence_kappa_omega, concurrence_x_state, separable_bound_oracle,
    separable_bound_oracle_on, separable_mixture_report, separable_state,
    separable_uncertainty_sum, SeparableEnsemble,
};
use crate::matrix::ComplexMatrix;
use crate::qubit::{
    bloch_to_density, pauli_observable, qubit_region_contains, qubit_variance_pair, BlochVector,
    PauliDirection,
};
use crate::qutrit::{
    embedded_observable, qutrit_boundary_min, qutrit_variance_pair, AppendedQutrit,
};
use crate::region::{contour_concurrence, contour_sum};
use crate::sample::{ball_vector, fibonacci_sphere, unit_vector, BlochSampler, SampleMode};
use crate::state::{robertson_bound, sum_uncertainty, variance, DensityMatrix, Observable};
use crate::symmetric::{
    coupling_unitary, extract_params, qutrit_to_two_qubit, transformed_observables,
    two_qubit_uncertainty, uncertainty_sum_kappa, KappaOmega,
};

/// The named suites exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Core,
    Regions,
    Atomic,
    Map,
    Entanglement,
}

impl Suite {
    pub fn all() -> [Suite; 5] {
        [
            Suite::Core,
            Suite::Regions,
            Suite::Atomic,
            Suite::Map,
            Suite::Entanglement,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Regions => "regions",
            Suite::Atomic => "atomic",
            Suite::Map => "map",
            Suite::Entanglement => "entanglement",
        }
    }
}

/// One named check and its outcome.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// All checks of one suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

type Check = fn(u64) -> Result<String, String>;

/// Runs one suite with the given seed.
pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let checks: Vec<(&'static str, Check)> = match suite {
        Suite::Core => vec![
            ("robertson_dominance", check_robertson_dominance),
            ("eigen_identities", check_eigen_identities),
            ("kron_mixed_product", check_kron_mixed_product),
            ("variance_reports", check_variance_reports),
            ("sampler_contract", check_sampler_contract),
        ],
        Suite::Regions => vec![
            ("qubit_membership", check_qubit_membership),
            ("qubit_formula_vs_trace", check_qubit_formula_vs_trace),
            ("qubit_rotation_covariance", check_qubit_rotation_covariance),
            ("qutrit_formula_vs_trace", check_qutrit_formula_vs_trace),
            ("qutrit_boundary_oracle", check_qutrit_boundary_oracle),
            ("qutrit_region_vs_qubit", check_qutrit_region_vs_qubit),
        ],
        Suite::Atomic => vec![
            ("preset_values", check_preset_values),
            ("atomic_formula_vs_trace", check_atomic_formula_vs_trace),
            ("population_minimum", check_population_minimum),
            ("subspace_pauli_closure", check_subspace_pauli_closure),
            ("min_sum_monotonicity", check_min_sum_monotonicity),
        ],
        Suite::Map => vec![
            ("unitary_and_observables", check_unitary_and_observables),
            ("param_round_trip", check_param_round_trip),
            ("spectrum_preservation", check_spectrum_preservation),
            ("observable_equivalence", check_observable_equivalence),
            ("permutation_symmetry", check_permutation_symmetry),
            ("kappa_consistency", check_kappa_consistency),
        ],
        Suite::Entanglement => vec![
            ("concurrence_triple_agreement", check_concurrence_triple),
            ("separable_zero_concurrence", check_separable_zero_concurrence),
            ("precision_implies_entanglement", check_precision_implies_entanglement),
            ("separable_sum_bound", check_separable_sum_bound),
            ("separable_bound_oracle", check_separable_bound_oracle),
            ("bell_limit", check_bell_limit),
        ],
    };

    let checks = checks
        .into_iter()
        .map(|(name, check)| {
            let derived = seed ^ splitmix(name);
            match check(derived) {
                Ok(detail) => CheckOutcome {
                    name,
                    passed: true,
                    detail,
                },
                Err(detail) => CheckOutcome {
                    name,
                    passed: false,
                    detail,
                },
            }
        })
        .collect();
    SuiteReport {
        suite: suite.name(),
        checks,
    }
}

/// Runs every suite in order.
pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    Suite::all()
        .into_iter()
        .map(|suite| run_suite(suite, seed))
        .collect()
}

fn splitmix(name: &str) -> u64 {
    // Stable per-check stream separation; any fixed mixing works.
    let mut h = 0xcbf29ce484222325u64;
    for byte in name.bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

// --- random draw helpers -------------------------------------------------

/// Random valid density matrix via `G G^dagger / Tr`.
pub fn random_density(rng: &mut impl Rng, dim: usize) -> DensityMatrix {
    let g = ComplexMatrix::from_fn(dim, |_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    let positive = &g * &g.adjoint();
    let trace = positive.trace().re;
    DensityMatrix::new(positive.scale(1.0 / trace)).expect("Gram matrices are valid states")
}

/// Random Hermitian observable with entries of order one.
pub fn random_observable(rng: &mut impl Rng, dim: usize) -> Observable {
    let b = ComplexMatrix::from_fn(dim, |_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    let herm = ComplexMatrix::from_fn(dim, |i, j| (b[(i, j)] + b[(j, i)].conj()) * 0.5);
    Observable::new(herm).expect("symmetrized matrices are Hermitian")
}

pub fn random_direction(rng: &mut impl Rng) -> PauliDirection {
    let [x, y, z] = unit_vector(rng);
    PauliDirection::new(x, y, z).expect("unit by construction")
}

/// A uniformly random orthonormal pair of directions.
pub fn random_orthogonal_pair(rng: &mut impl Rng) -> (PauliDirection, PauliDirection) {
    loop {
        let a = random_direction(rng);
        let [v1, v2, v3] = unit_vector(rng);
        let [a1, a2, a3] = a.components();
        let overlap = v1 * a1 + v2 * a2 + v3 * a3;
        let perp = [v1 - overlap * a1, v2 - overlap * a2, v3 - overlap * a3];
        let norm = (perp[0].powi(2) + perp[1].powi(2) + perp[2].powi(2)).sqrt();
        if norm > 1e-6 {
            let b = PauliDirection::new(perp[0] / norm, perp[1] / norm, perp[2] / norm)
                .expect("normalized");
            return (a, b);
        }
    }
}

pub fn random_unit_bloch(rng: &mut impl Rng) -> BlochVector {
    let [x, y, z] = unit_vector(rng);
    BlochVector::new(x, y, z).expect("unit vectors are admissible")
}

pub fn random_qutrit(rng: &mut impl Rng) -> AppendedQutrit {
    AppendedQutrit::new(rng.random(), random_unit_bloch(rng)).expect("parameters in range")
}

fn rotation_matrix(axis: [f64; 3], angle: f64) -> [[f64; 3]; 3] {
    let (sin, cos) = angle.sin_cos();
    let [x, y, z] = axis;
    let one_minus = 1.0 - cos;
    [
        [
            cos + x * x * one_minus,
            x * y * one_minus - z * sin,
            x * z * one_minus + y * sin,
        ],
        [
            y * x * one_minus + z * sin,
            cos + y * y * one_minus,
            y * z * one_minus - x * sin,
        ],
        [
            z * x * one_minus - y * sin,
            z * y * one_minus + x * sin,
            cos + z * z * one_minus,
        ],
    ]
}

fn rotate_vec(rotation: &[[f64; 3]; 3], v: [f64; 3]) -> [f64; 3] {
    [
        rotation[0][0] * v[0] + rotation[0][1] * v[1] + rotation[0][2] * v[2],
        rotation[1][0] * v[0] + rotation[1][1] * v[1] + rotation[1][2] * v[2],
        rotation[2][0] * v[0] + rotation[2][1] * v[1] + rotation[2][2] * v[2],
    ]
}

// --- core checks ----------------------------------------------------------

fn check_robertson_dominance(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for trial in 0..trials {
        let dim = 2 + trial % 3;
        let rho = random_density(&mut rng, dim);
        let a1 = random_observable(&mut rng, dim);
        let a2 = random_observable(&mut rng, dim);
        let (lhs, rhs) = robertson_bound(&rho, &a1, &a2).map_err(|e| e.to_string())?;
        if lhs < rhs - 1e-10 {
            return Err(format!(
                "trial {trial} (dim {dim}): product {lhs} below commutator bound {rhs}"
            ));
        }
    }
    Ok(format!("{trials} random (state, pair) draws dominate the commutator bound"))
}

fn check_eigen_identities(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 1000;
    for trial in 0..trials {
        let dim = 2 + trial % 3;
        let m = random_observable(&mut rng, dim);
        let values = hermitian_eigenvalues(m.mat()).map_err(|e| e.to_string())?;
        if values.len() != dim {
            return Err(format!("trial {trial}: expected {dim} eigenvalues"));
        }
        let scale = m.mat().max_abs().max(1.0).powi(dim as i32);
        let sum: f64 = values.iter().sum();
        let product: f64 = values.iter().product();
        if (sum - m.mat().trace().re).abs() > 1e-9 * scale {
            return Err(format!("trial {trial}: eigenvalue sum misses trace"));
        }
        if (product - m.mat().det().re).abs() > 1e-9 * scale {
            return Err(format!("trial {trial}: eigenvalue product misses determinant"));
        }
        for &lambda in &values {
            let shifted = m.mat() - &ComplexMatrix::identity(dim).scale(lambda);
            let residual = shifted.det().norm();
            if residual > 1e-9 * scale {
                return Err(format!(
                    "trial {trial}: characteristic residual {residual} at lambda {lambda}"
                ));
            }
        }
    }
    Ok(format!("{trials} random Hermitian draws satisfy trace/det/residual identities"))
}

fn check_kron_mixed_product(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 1000;
    for trial in 0..trials {
        let draw = |rng: &mut ChaCha8Rng| {
            ComplexMatrix::from_fn(2, |_, _| {
                Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            })
        };
        let (a, b, c, d) = (draw(&mut rng), draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let lhs = &a.kron(&b) * &c.kron(&d);
        let rhs = (&a * &c).kron(&(&b * &d));
        if lhs.max_abs_diff(&rhs) > 1e-12 {
            return Err(format!("trial {trial}: mixed-product identity violated"));
        }
    }
    Ok(format!("{trials} random 2x2 draws satisfy the mixed-product identity"))
}

fn check_variance_reports(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for trial in 0..trials {
        let dim = 2 + trial % 3;
        let rho = random_density(&mut rng, dim);
        let observables = [
            random_observable(&mut rng, dim),
            random_observable(&mut rng, dim),
        ];
        let report = sum_uncertainty(&rho, &observables).map_err(|e| e.to_string())?;
        for (k, &v) in report.variances.iter().enumerate() {
            if v < 0.0 {
                return Err(format!("trial {trial}: negative variance {v} at slot {k}"));
            }
            let single = variance(&rho, &observables[k]).map_err(|e| e.to_string())?;
            if (single - v).abs() > 0.0 {
                return Err(format!("trial {trial}: report and direct variance disagree"));
            }
        }
        let direct: f64 = report.variances.iter().sum();
        if report.sum_of_variances != direct {
            return Err(format!("trial {trial}: sum is not the exact fold of variances"));
        }
    }
    Ok(format!("{trials} reports have nonnegative variances and exact sums"))
}

fn check_sampler_contract(seed: u64) -> Result<String, String> {
    let mut pure = BlochSampler::new(SampleMode::PureUniform, seed);
    for _ in 0..1000 {
        let r = pure.next_vector();
        if (r.norm() - 1.0).abs() > 1e-12 {
            return Err(format!("pure sample has norm {}", r.norm()));
        }
    }
    let first = BlochSampler::new(SampleMode::BallUniform, 42).next_vector();
    let second = BlochSampler::new(SampleMode::BallUniform, 42).next_vector();
    if first != second {
        return Err("fixed seed 42 does not reproduce its draw".to_string());
    }
    let mut ball = BlochSampler::new(SampleMode::BallUniform, seed);
    let n = 1_000_000;
    let mean = (0..n)
        .map(|_| ball.next_vector().norm().powi(3))
        .sum::<f64>()
        / n as f64;
    if (mean - 0.5).abs() > 0.01 {
        return Err(format!("ball-uniform mean |r|^3 = {mean}, expected 0.5 +- 0.01"));
    }
    Ok(format!("unit norms, seed determinism, and ball radial moment {mean:.4}"))
}

// --- region checks --------------------------------------------------------

fn check_qubit_membership(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 100_000;
    for trial in 0..trials {
        let [r1, r2, r3] = ball_vector(&mut rng);
        let r = BlochVector::new(r1, r2, r3).expect("in ball");
        let report = qubit_variance_pair(&r, &PauliDirection::x(), &PauliDirection::y())
            .map_err(|e| e.to_string())?;
        let d1 = report.variances[0].sqrt();
        let d2 = report.variances[1].sqrt();
        if !qubit_region_contains(d1, d2).map_err(|e| e.to_string())? {
            return Err(format!("trial {trial}: point ({d1}, {d2}) escaped the region"));
        }
    }
    Ok(format!("{trials} sampled qubit points stay in the region"))
}

fn check_qubit_formula_vs_trace(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for trial in 0..trials {
        let [r1, r2, r3] = ball_vector(&mut rng);
        let r = BlochVector::new(r1, r2, r3).expect("in ball");
        let (a, b) = random_orthogonal_pair(&mut rng);
        let report = qubit_variance_pair(&r, &a, &b).map_err(|e| e.to_string())?;
        let rho = bloch_to_density(&r).map_err(|e| e.to_string())?;
        let direct = sum_uncertainty(&rho, &[pauli_observable(&a), pauli_observable(&b)])
            .map_err(|e| e.to_string())?;
        for k in 0..2 {
            if (report.variances[k] - direct.variances[k]).abs() > 1e-12 {
                return Err(format!("trial {trial}: slot {k} formula disagrees with trace"));
            }
        }
    }
    Ok(format!("{trials} draws: closed form matches the trace route"))
}

fn check_qubit_rotation_covariance(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 1000;
    for trial in 0..trials {
        let [r1, r2, r3] = ball_vector(&mut rng);
        let r = BlochVector::new(r1, r2, r3).expect("in ball");
        let (a, b) = random_orthogonal_pair(&mut rng);
        let rotation = rotation_matrix(unit_vector(&mut rng), rng.random_range(0.0..std::f64::consts::TAU));
        let rotate_dir = |d: &PauliDirection| {
            let [x, y, z] = rotate_vec(&rotation, d.components());
            let norm = (x * x + y * y + z * z).sqrt();
            PauliDirection::new(x / norm, y / norm, z / norm).expect("normalized")
        };
        let [x, y, z] = rotate_vec(&rotation, r.components());
        let rotated_r = BlochVector::new(
            x.clamp(-1.0, 1.0),
            y.clamp(-1.0, 1.0),
            z.clamp(-1.0, 1.0),
        );
        let rotated_r = match rotated_r {
            Ok(v) => v,
            Err(_) => continue,
        };
        let before = qubit_variance_pair(&r, &a, &b).map_err(|e| e.to_string())?;
        let after = qubit_variance_pair(&rotated_r, &rotate_dir(&a), &rotate_dir(&b))
            .map_err(|e| e.to_string())?;
        for k in 0..2 {
            if (before.variances[k] - after.variances[k]).abs() > 1e-12 {
                return Err(format!("trial {trial}: rotation changed the report"));
            }
        }
    }
    Ok(format!("{trials} rotated frames leave reports invariant"))
}

fn check_qutrit_formula_vs_trace(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for trial in 0..trials {
        let qutrit = random_qutrit(&mut rng);
        let (a, b) = random_orthogonal_pair(&mut rng);
        let report = qutrit_variance_pair(&qutrit, &a, &b).map_err(|e| e.to_string())?;
        let direct = sum_uncertainty(
            &qutrit.density(),
            &[embedded_observable(&a), embedded_observable(&b)],
        )
        .map_err(|e| e.to_string())?;
        for k in 0..2 {
            if (report.variances[k] - direct.variances[k]).abs() > 1e-12
                || (report.second_moments[k] - direct.second_moments[k]).abs() > 1e-12
            {
                return Err(format!("trial {trial}: slot {k} formula disagrees with trace"));
            }
        }
    }
    Ok(format!("{trials} draws: appended-level closed form matches the trace route"))
}

/// Per-abscissa minima found by brute force over a weight grid and a
/// direction lattice.
#[derive(Debug, Clone)]
pub struct BoundaryOracleOutcome {
    pub abscissae: Vec<f64>,
    pub oracle_minima: Vec<f64>,
    pub analytic: Vec<f64>,
    pub max_abs_error: f64,
}

/// Brute-force confirmation of the region boundary curve.
///
/// Searches the product of a uniform weight grid (augmented with the exact
/// squares of the abscissae, where the analytic minima sit) and a Fibonacci
/// direction lattice (augmented with the frame axes). A sample contributes to
/// an abscissa when its first deviation lies within `band` of it.
pub fn qutrit_boundary_oracle(
    n_abscissae: usize,
    omega_grid_n: usize,
    n_directions: usize,
    band: f64,
) -> BoundaryOracleOutcome {
    let abscissae: Vec<f64> = (0..n_abscissae)
        .map(|k| k as f64 / (n_abscissae - 1) as f64)
        .collect();
    let step = 1.0 / (n_abscissae - 1) as f64;

    let mut omegas: Vec<f64> = (0..omega_grid_n)
        .map(|k| k as f64 / (omega_grid_n - 1) as f64)
        .collect();
    omegas.extend(abscissae.iter().map(|d| d * d));

    let mut directions = fibonacci_sphere(n_directions);
    directions.extend([
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ]);

    let mut minima = vec![f64::INFINITY; n_abscissae];
    for direction in &directions {
        let (r1_sq, r2_sq) = (direction[0] * direction[0], direction[1] * direction[1]);
        for &omega in &omegas {
            let d1 = (omega - omega * omega * r1_sq).max(0.0).sqrt();
            let index = (d1 / step).round() as usize;
            if index >= n_abscissae || (d1 - abscissae[index]).abs() > band {
                continue;
            }
            let d2 = (omega - omega * omega * r2_sq).max(0.0).sqrt();
            if d2 < minima[index] {
                minima[index] = d2;
            }
        }
    }

    let analytic: Vec<f64> = abscissae
        .iter()
        .map(|&d| qutrit_boundary_min(d).expect("abscissae lie in range"))
        .collect();
    let max_abs_error = minima
        .iter()
        .zip(&analytic)
        .map(|(&found, &expected)| {
            if found.is_infinite() {
                f64::INFINITY
            } else {
                (found - expected).abs()
            }
        })
        .fold(0.0f64, f64::max);

    BoundaryOracleOutcome {
        abscissae,
        oracle_minima: minima,
        analytic,
        max_abs_error,
    }
}

fn check_qutrit_boundary_oracle(_seed: u64) -> Result<String, String> {
    let outcome = qutrit_boundary_oracle(101, 401, 20_000, 5e-4);
    if outcome.max_abs_error > 0.01 {
        return Err(format!(
            "boundary oracle max error {} exceeds 0.01",
            outcome.max_abs_error
        ));
    }
    // The origin is attained exactly at zero weight.
    let origin = AppendedQutrit::new(0.0, BlochVector::new(0.0, 0.0, 1.0).expect("unit"))
        .expect("valid");
    let report = qutrit_variance_pair(&origin, &PauliDirection::x(), &PauliDirection::y())
        .map_err(|e| e.to_string())?;
    if report.variances != vec![0.0, 0.0] {
        return Err("origin not attained exactly at zero weight".to_string());
    }
    Ok(format!(
        "oracle minima match the curve at 101 abscissae, max error {:.2e}",
        outcome.max_abs_error
    ))
}

fn check_qutrit_region_vs_qubit(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    let mut below_qubit = 0usize;
    for trial in 0..trials {
        let qutrit = random_qutrit(&mut rng);
        let report = qutrit_variance_pair(&qutrit, &PauliDirection::x(), &PauliDirection::y())
            .map_err(|e| e.to_string())?;
        let d1 = report.variances[0].sqrt();
        let d2 = report.variances[1].sqrt();
        // Both orientations of the boundary curve bound the samples.
        let lower = qutrit_boundary_min(d1).map_err(|e| e.to_string())?;
        let mirrored = qutrit_boundary_min(d2).map_err(|e| e.to_string())?;
        if d2 < lower - 1e-6 || d1 < mirrored - 1e-6 {
            return Err(format!("trial {trial}: point ({d1}, {d2}) dips below the curve"));
        }
        if report.sum_of_variances < 1.0 {
            below_qubit += 1;
            if qubit_region_contains(d1, d2).map_err(|e| e.to_string())? {
                return Err(format!(
                    "trial {trial}: sum {} below 1 yet inside the qubit region",
                    report.sum_of_variances
                ));
            }
        }
    }
    if below_qubit == 0 {
        return Err("no sampled point fell below the qubit bound".to_string());
    }
    Ok(format!(
        "{below_qubit} of {trials} samples beat the qubit bound and all violate its region test"
    ))
}

// --- atomic checks ---------------------------------------------------------

fn check_preset_values(_seed: u64) -> Result<String, String> {
    let close = |a: f64, b: f64| (a - b).abs() < 1e-12;
    for (pair, value) in preset_min_sums(AtomicPreset::Lambda) {
        match value {
            MinSum::Point(v) if close(v, 0.75) => {}
            other => return Err(format!("lambda pair {pair}: unexpected {other:?}")),
        }
    }
    let vee = preset_min_sums(AtomicPreset::Vee);
    let expected_vee = [(1usize, 3usize, 0.84), (2, 3, 0.96)];
    for ((pair, value), (i, j, want)) in vee.iter().zip(expected_vee) {
        let matches_pair = pair.i() == i && pair.j() == j;
        match value {
            MinSum::Point(v) if matches_pair && close(*v, want) => {}
            other => return Err(format!("vee pair {pair}: unexpected {other:?}")),
        }
    }
    let xi = preset_min_sums(AtomicPreset::Xi);
    let eight_ninths = 8.0 / 9.0;
    let expected_xi = [(0.75, eight_ninths), (eight_ninths, 1.0)];
    for ((pair, value), (low, high)) in xi.iter().zip(expected_xi) {
        match value {
            MinSum::Interval(a, b) if close(*a, low) && close(*b, high) => {}
            other => return Err(format!("xi pair {pair}: unexpected {other:?}")),
        }
    }
    Ok("lambda 0.75/0.75, vee 0.84/0.96, xi [3/4, 8/9] and [8/9, 1]".to_string())
}

fn check_atomic_formula_vs_trace(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    let pairs = SubspacePair::all();
    for trial in 0..trials {
        let rho = random_density(&mut rng, 3);
        let pair = pairs[trial % 3];
        let (a, b) = random_orthogonal_pair(&mut rng);
        let report = atomic_uncertainty_sum(&rho, pair, &a, &b).map_err(|e| e.to_string())?;

        let build = |direction: &PauliDirection| {
            let [a1, a2, a3] = direction.components();
            let mat = ComplexMatrix::from_fn(3, |r, c| {
                sigma_ij(pair, 1).expect("valid").mat()[(r, c)] * a1
                    + sigma_ij(pair, 2).expect("valid").mat()[(r, c)] * a2
                    + sigma_ij(pair, 3).expect("valid").mat()[(r, c)] * a3
            });
            Observable::new(mat).expect("Hermitian combination")
        };
        let direct =
            sum_uncertainty(&rho, &[build(&a), build(&b)]).map_err(|e| e.to_string())?;
        if (report.sum_of_variances - direct.sum_of_variances).abs() > 1e-10 {
            return Err(format!(
                "trial {trial}: population formula {} vs trace {}",
                report.sum_of_variances, direct.sum_of_variances
            ));
        }
    }
    Ok(format!("{trials} draws: population formula matches the trace route"))
}

fn check_population_minimum(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    let pairs = SubspacePair::all();
    for trial in 0..trials {
        // Random populations, then a random admissible coherence in the
        // chosen subspace (the third level stays decoupled).
        let pair = pairs[trial % 3];
        let mut pops = [rng.random::<f64>(), rng.random::<f64>(), rng.random::<f64>()];
        let total: f64 = pops.iter().sum();
        for p in &mut pops {
            *p /= total;
        }
        let (i, j) = (pair.i() - 1, pair.j() - 1);
        let max_coherence = (pops[i] * pops[j]).sqrt();
        let magnitude = rng.random::<f64>() * max_coherence;
        let phase = rng.random::<f64>() * std::f64::consts::TAU;
        let mut mat = ComplexMatrix::diag(&pops);
        mat[(i, j)] = Complex64::from_polar(magnitude, phase);
        mat[(j, i)] = Complex64::from_polar(magnitude, -phase);
        let rho = DensityMatrix::new(mat).map_err(|e| e.to_string())?;

        let n = subspace_bloch(&rho, pair).map_err(|e| e.to_string())?;
        let (a, b) = optimal_frame(&n);
        let report = atomic_uncertainty_sum(&rho, pair, &a, &b).map_err(|e| e.to_string())?;
        let floor = min_uncertainty_sum(pops[i], pops[j]).map_err(|e| e.to_string())?;
        if report.sum_of_variances < floor - 1e-10 {
            return Err(format!(
                "trial {trial}: sum {} dips below the population floor {floor}",
                report.sum_of_variances
            ));
        }
        // Maximal coherence saturates the floor exactly.
        let mut saturated = ComplexMatrix::diag(&pops);
        saturated[(i, j)] = Complex64::from_polar(max_coherence, phase);
        saturated[(j, i)] = Complex64::from_polar(max_coherence, -phase);
        let saturated = DensityMatrix::new(saturated).map_err(|e| e.to_string())?;
        let n = subspace_bloch(&saturated, pair).map_err(|e| e.to_string())?;
        let (a, b) = optimal_frame(&n);
        let at_floor = atomic_uncertainty_sum(&saturated, pair, &a, &b)
            .map_err(|e| e.to_string())?;
        if (at_floor.sum_of_variances - floor).abs() > 1e-10 {
            return Err(format!(
                "trial {trial}: maximal coherence gives {} instead of the floor {floor}",
                at_floor.sum_of_variances
            ));
        }
    }
    Ok(format!("{trials} coherence draws respect and saturate the population floor"))
}

fn check_subspace_pauli_closure(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 300;
    for trial in 0..trials {
        let direction = random_direction(&mut rng);
        for pair in SubspacePair::all() {
            let [a1, a2, a3] = direction.components();
            let combined = ComplexMatrix::from_fn(3, |r, c| {
                sigma_ij(pair, 1).expect("valid").mat()[(r, c)] * a1
                    + sigma_ij(pair, 2).expect("valid").mat()[(r, c)] * a2
                    + sigma_ij(pair, 3).expect("valid").mat()[(r, c)] * a3
            });
            let squared = &combined * &combined;
            let mut projector = ComplexMatrix::zeros(3);
            projector[(pair.i() - 1, pair.i() - 1)] = Complex64::ONE;
            projector[(pair.j() - 1, pair.j() - 1)] = Complex64::ONE;
            if squared.max_abs_diff(&projector) > 1e-12 {
                return Err(format!("trial {trial}, pair {pair}: square is not the projector"));
            }
        }
    }
    Ok(format!("{trials} random directions close onto the subspace projector"))
}

fn check_min_sum_monotonicity(_seed: u64) -> Result<String, String> {
    let mut previous = f64::NEG_INFINITY;
    for step in 0..=1000 {
        let weight = step as f64 / 1000.0;
        let value = min_uncertainty_sum(weight / 2.0, weight / 2.0)
            .map_err(|e| e.to_string())?;
        if value <= previous {
            return Err(format!("minimum not strictly increasing at weight {weight}"));
        }
        if weight < 1.0 && value >= 1.0 {
            return Err(format!("minimum reaches 1 early at weight {weight}"));
        }
        previous = value;
    }
    Ok("minimum strictly increases with total population and stays below 1".to_string())
}

// --- map checks -------------------------------------------------------------

fn check_unitary_and_observables(_seed: u64) -> Result<String, String> {
    let u = coupling_unitary();
    let identity = ComplexMatrix::identity(4);
    if (&u.adjoint() * &u).max_abs_diff(&identity) > 1e-15 {
        return Err("basis transformation is not unitary".to_string());
    }
    let (first, second) = transformed_observables();
    for (axis, observable) in [(1usize, &first), (2usize, &second)] {
        let block = crate::qubit::pauli_matrix(axis);
        let embedded = ComplexMatrix::from_fn(4, |i, j| {
            if i < 2 && j < 2 {
                block[(i, j)]
            } else {
                Complex64::ZERO
            }
        });
        let conjugated = &(&u.adjoint() * &embedded) * &u;
        if observable.mat().max_abs_diff(&conjugated) > 1e-15 {
            return Err(format!("axis {axis} image differs from the conjugated embedding"));
        }
    }
    Ok("unitarity and both transformed observables verified to 1e-15".to_string())
}

fn check_param_round_trip(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for trial in 0..trials {
        let qutrit = random_qutrit(&mut rng);
        let rho = qutrit_to_two_qubit(&qutrit);
        let params = extract_params(&rho).map_err(|e| e.to_string())?;
        let rebuilt = params.reconstruct().map_err(|e| e.to_string())?;
        if rebuilt.mat().max_abs_diff(rho.mat()) > 1e-12 {
            return Err(format!("trial {trial}: parameter round trip drifted"));
        }
    }
    Ok(format!("{trials} extract/reconstruct round trips stay within 1e-12"))
}

fn check_spectrum_preservation(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for trial in 0..trials {
        let qutrit = random_qutrit(&mut rng);
        let embedded = crate::symmetric::embedded_qutrit(&qutrit);
        let before = hermitian_eigenvalues(embedded.mat()).map_err(|e| e.to_string())?;
        let after = hermitian_eigenvalues(qutrit_to_two_qubit(&qutrit).mat())
            .map_err(|e| e.to_string())?;
        for (x, y) in before.iter().zip(&after) {
            if (x - y).abs() > 1e-12 {
                return Err(format!("trial {trial}: spectra differ"));
            }
        }
    }
    Ok(format!("{trials} draws: mapped spectra match the embedded spectra"))
}

fn check_observable_equivalence(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for trial in 0..trials {
        let qutrit = random_qutrit(&mut rng);
        let from_map = two_qubit_uncertainty(&qutrit);
        let from_qutrit = qutrit_variance_pair(
            &qutrit,
            &PauliDirection::x(),
            &PauliDirection::y(),
        )
        .map_err(|e| e.to_string())?;
        for k in 0..2 {
            if (from_map.means[k] - from_qutrit.means[k]).abs() > 1e-12
                || (from_map.second_moments[k] - from_qutrit.second_moments[k]).abs() > 1e-12
                || (from_map.variances[k] - from_qutrit.variances[k]).abs() > 1e-12
            {
                return Err(format!("trial {trial}: moment {k} differs across the map"));
            }
        }
        // Cross-check the first and second moments against traces on the
        // mapped state.
        let rho = qutrit_to_two_qubit(&qutrit);
        let (first, second) = transformed_observables();
        let direct = sum_uncertainty(&rho, &[first, second]).map_err(|e| e.to_string())?;
        for k in 0..2 {
            if (direct.means[k] - from_map.means[k]).abs() > 1e-12
                || (direct.second_moments[k] - from_map.second_moments[k]).abs() > 1e-12
            {
                return Err(format!("trial {trial}: trace moments differ at slot {k}"));
            }
        }
    }
    Ok(format!("{trials} draws: qutrit and two-qubit moments agree to 1e-12"))
}

fn check_permutation_symmetry(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let swap = crate::symmetric::swap_matrix();
    let trials = 10_000;
    for trial in 0..trials {
        let rho = qutrit_to_two_qubit(&random_qutrit(&mut rng));
        let swapped = &(&swap * rho.mat()) * &swap;
        if swapped.max_abs_diff(rho.mat()) > 1e-12 {
            return Err(format!("trial {trial}: mapped state breaks swap symmetry"));
        }
    }
    Ok(format!("{trials} mapped states are swap symmetric"))
}

fn check_kappa_consistency(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for trial in 0..trials {
        let qutrit = random_qutrit(&mut rng);
        let ko = KappaOmega::from_qutrit(&qutrit);
        let report = two_qubit_uncertainty(&qutrit);
        if (uncertainty_sum_kappa(&ko) - report.sum_of_variances).abs() > 1e-12 {
            return Err(format!("trial {trial}: closed form differs from the report sum"));
        }
    }
    Ok(format!("{trials} draws: 2w - w^2 k^2 equals the report sum"))
}

// --- entanglement checks -----------------------------------------------------

fn check_concurrence_triple(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for trial in 0..trials {
        let qutrit = random_qutrit(&mut rng);
        let rho = qutrit_to_two_qubit(&qutrit);
        let general = concurrence_general(&rho).map_err(|e| e.to_string())?.value;
        let x_form = concurrence_x_state(&rho).map_err(|e| e.to_string())?;
        let closed = concurrence_kappa_omega(&KappaOmega::from_qutrit(&qutrit));
        if (general - x_form).abs() > 1e-8 || (x_form - closed).abs() > 1e-8 {
            return Err(format!(
                "trial {trial}: routes disagree: {general} vs {x_form} vs {closed}"
            ));
        }
    }
    Ok(format!("{trials} draws: eigenvalue, X-form and closed-form routes agree to 1e-8"))
}

fn check_separable_zero_concurrence(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 1000;
    for trial in 0..trials {
        let ensemble = random_ensemble(&mut rng);
        let rho = separable_state(&ensemble);
        let value = concurrence_general(&rho).map_err(|e| e.to_string())?.value;
        if value >= 1e-8 {
            return Err(format!("trial {trial}: separable state has concurrence {value}"));
        }
    }
    Ok(format!("{trials} random ensembles have zero concurrence"))
}

pub fn random_ensemble(rng: &mut impl Rng) -> SeparableEnsemble {
    let terms = rng.random_range(1..=8);
    let mut weights: Vec<f64> = (0..terms).map(|_| rng.random::<f64>() + 1e-9).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    // Renormalize the trailing weight so the sum is exactly 1.
    let head: f64 = weights[..terms - 1].iter().sum();
    weights[terms - 1] = 1.0 - head;
    let terms = weights
        .into_iter()
        .map(|w| (w, unit_vector(rng)))
        .collect();
    SeparableEnsemble::new(terms).expect("constructed to satisfy the invariants")
}

fn check_precision_implies_entanglement(_seed: u64) -> Result<String, String> {
    // A shared grid of at least 1e5 cells.
    let grid_n = 317;
    let sums = contour_sum(grid_n);
    let concurrences = contour_concurrence(grid_n);
    let mut witnesses = 0usize;
    let mut entangled_above = 0usize;
    for (sum_row, conc_row) in sums.z.iter().zip(&concurrences.z) {
        for (sum, concurrence) in sum_row.iter().zip(conc_row) {
            let (sum, concurrence) = (sum.expect("valid"), concurrence.expect("valid"));
            if sum < 0.75 {
                witnesses += 1;
                if concurrence <= 0.0 {
                    return Err(format!(
                        "cell with sum {sum} below 3/4 has zero concurrence"
                    ));
                }
            }
            if concurrence > 0.0 && sum >= 0.75 {
                entangled_above += 1;
            }
        }
    }
    if witnesses == 0 {
        return Err("no grid cell fell below 3/4".to_string());
    }
    if entangled_above == 0 {
        return Err("no entangled cell with sum at or above 3/4".to_string());
    }
    Ok(format!(
        "{witnesses} cells below 3/4 all entangled; {entangled_above} entangled cells at or above 3/4"
    ))
}

fn check_separable_sum_bound(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 10_000;
    for trial in 0..trials {
        let ensemble = random_ensemble(&mut rng);
        let averaged = separable_uncertainty_sum(&ensemble);
        if averaged < 0.75 - 1e-12 {
            return Err(format!("trial {trial}: component average {averaged} below 3/4"));
        }
        if trial % 10 == 0 {
            let mixture = separable_mixture_report(&ensemble).sum_of_variances;
            if mixture < averaged - 1e-10 {
                return Err(format!(
                    "trial {trial}: mixture sum {mixture} below the component average {averaged}"
                ));
            }
        }
    }
    Ok(format!("{trials} ensembles stay at or above 3/4"))
}

fn check_separable_bound_oracle(_seed: u64) -> Result<String, String> {
    let full = separable_bound_oracle(100_000);
    if (full - 0.75).abs() > 1e-9 {
        return Err(format!("grid minimum {full} differs from 3/4"));
    }
    let restricted = separable_bound_oracle_on(1001, 0.5, 1.0);
    if (restricted - 1.109375).abs() > 1e-12 {
        return Err(format!("restricted minimum {restricted} differs from 1.109375"));
    }
    Ok("grid minimum 3/4; restricted grid reproduces the polynomial".to_string())
}

fn check_bell_limit(_seed: u64) -> Result<String, String> {
    let ko = KappaOmega::new(0.0, 0.7).expect("in range");
    let concurrence = concurrence_kappa_omega(&ko);
    let sum = uncertainty_sum_kappa(&ko);
    if concurrence != 1.0 || sum != 0.0 {
        return Err(format!(
            "zero-weight limit gives concurrence {concurrence} and sum {sum}"
        ));
    }
    Ok("zero-weight limit: concurrence 1 with vanishing sum".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_density_is_valid_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for dim in [2, 3, 4] {
            let rho = random_density(&mut rng, dim);
            assert_eq!(rho.dim(), dim);
        }
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        assert_eq!(
            random_density(&mut a, 3).mat().max_abs_diff(random_density(&mut b, 3).mat()),
            0.0
        );
    }

    #[test]
    fn fast_suites_pass() {
        for suite in [Suite::Atomic, Suite::Map] {
            let report = run_suite(suite, 1);
            assert!(
                report.all_passed(),
                "{}: {:?}",
                report.suite,
                report
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let first = run_suite(Suite::Atomic, 7);
        let second = run_suite(Suite::Atomic, 7);
        for (a, b) in first.checks.iter().zip(&second.checks) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.passed, b.passed);
            assert_eq!(a.detail, b.detail);
        }
    }

    #[test]
    fn boundary_oracle_with_small_grids_is_close() {
        // Small lattice for test speed; the full sizes run in the suite and
        // the acceptance tests.
        let outcome = qutrit_boundary_oracle(21, 101, 2000, 5e-4);
        assert!(outcome.max_abs_error < 0.02, "error {}", outcome.max_abs_error);
    }
}
