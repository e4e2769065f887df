//! `uncert` — deterministic command-line access to the uncertainty-region
//! computations.
//!
//! Exit codes: 0 success, 1 failed verification invariant, 2 usage error,
//! 3 I/O failure.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use uncert_core::{
    concurrence_general, contour_concurrence, contour_sum, min_sum_surface, min_uncertainty_sum,
    preset_min_sums, qutrit_to_two_qubit, sample_qubit_region, sample_qutrit_region,
    two_qubit_uncertainty, AppendedQutrit, AtomicPreset, BlochVector, MinSum, SubspacePair,
};
use uncert_core::{extract_params, verify};

use output::{matrix_to_pairs, write_output, AppError, Envelope};

#[derive(Parser)]
#[command(
    name = "uncert",
    about = "Sum uncertainty relations and uncertainty regions for qubits, qutrits and 3-level systems",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample an uncertainty region as (d1, d2) standard-deviation pairs.
    Region(RegionArgs),
    /// Minimum uncertainty sums of 3-level systems from populations or presets.
    Atomic(AtomicArgs),
    /// Map an appended-level qutrit to its symmetric two-qubit state.
    Map(MapArgs),
    /// Scalar fields over parameter grids (long-form CSV or JSON).
    Contour(ContourArgs),
    /// Run the built-in property suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SystemKind {
    Qubit,
    Qutrit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct RegionArgs {
    /// Which system's region to sample.
    #[arg(long, value_enum)]
    system: SystemKind,
    /// Number of random samples (at least 1).
    #[arg(long)]
    samples: usize,
    /// RNG seed; falls back to UNCERT_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AtomicSource {
    /// Steady-state preset.
    #[arg(long, value_enum)]
    preset: Option<PresetArg>,
    /// Explicit populations "p1,p2,p3" (nonnegative, summing to 1).
    #[arg(long, value_name = "P1,P2,P3")]
    pop: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PresetArg {
    Lambda,
    Vee,
    Xi,
}

impl From<PresetArg> for AtomicPreset {
    fn from(value: PresetArg) -> Self {
        match value {
            PresetArg::Lambda => AtomicPreset::Lambda,
            PresetArg::Vee => AtomicPreset::Vee,
            PresetArg::Xi => AtomicPreset::Xi,
        }
    }
}

#[derive(Args)]
struct AtomicArgs {
    #[command(flatten)]
    source: AtomicSource,
    /// Level pair: 12, 13 or 23.
    #[arg(long)]
    pair: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapEmit {
    #[value(alias = "rho_ab")]
    RhoAb,
    Params,
    Uncertainty,
    Concurrence,
}

#[derive(Args)]
struct MapArgs {
    /// Qubit weight in [0, 1].
    #[arg(long)]
    omega: f64,
    /// Unit mean-spin vector "r1,r2,r3" (unit to 1e-9; normalized exactly).
    #[arg(long, value_name = "R1,R2,R3")]
    r: String,
    #[arg(long, value_enum)]
    emit: MapEmit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ContourQuantity {
    Sum,
    Concurrence,
    MinSumSurface,
}

#[derive(Args)]
struct ContourArgs {
    #[arg(long, value_enum)]
    quantity: ContourQuantity,
    /// Grid points per axis (at least 2).
    #[arg(long)]
    grid: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Core,
    Regions,
    Atomic,
    Map,
    Entanglement,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    /// RNG seed; falls back to UNCERT_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(AppError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(AppError::Io(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, AppError> {
    match command {
        Command::Region(args) => cmd_region(args),
        Command::Atomic(args) => cmd_atomic(args),
        Command::Map(args) => cmd_map(args),
        Command::Contour(args) => cmd_contour(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// Seed resolution: flag wins over the UNCERT_SEED variable; default 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, AppError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("UNCERT_SEED") {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| AppError::Usage(format!("UNCERT_SEED is not a valid seed: {text:?}"))),
        Err(_) => Ok(0),
    }
}

fn parse_triple(text: &str, what: &str) -> Result<[f64; 3], AppError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(AppError::Usage(format!(
            "{what} must be three comma-separated numbers, got {text:?}"
        )));
    }
    let mut values = [0.0; 3];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|_| AppError::Usage(format!("{what} component {part:?} is not a number")))?;
    }
    Ok(values)
}

fn parse_pair(text: &str) -> Result<SubspacePair, AppError> {
    let pair = match text {
        "12" => SubspacePair::new(1, 2),
        "13" => SubspacePair::new(1, 3),
        "23" => SubspacePair::new(2, 3),
        other => {
            return Err(AppError::Usage(format!(
                "pair must be 12, 13 or 23, got {other:?}"
            )))
        }
    };
    pair.map_err(|e| AppError::Usage(e.to_string()))
}

// --- region -----------------------------------------------------------------

#[derive(Serialize)]
struct RegionInputs {
    system: &'static str,
    samples: usize,
    seed: u64,
    format: &'static str,
}

fn cmd_region(args: RegionArgs) -> Result<ExitCode, AppError> {
    if args.samples < 1 {
        return Err(AppError::Usage("--samples must be at least 1".to_string()));
    }
    let seed = resolve_seed(args.seed)?;
    let (system, points) = match args.system {
        SystemKind::Qubit => ("qubit", sample_qubit_region(args.samples, seed)),
        SystemKind::Qutrit => ("qutrit", sample_qutrit_region(args.samples, seed)),
    };
    let content = match args.format {
        OutputFormat::Csv => {
            let mut text = String::from("d1,d2,tag\n");
            for point in &points {
                text.push_str(&format!("{},{},{}\n", point.d1, point.d2, point.tag));
            }
            text
        }
        OutputFormat::Json => {
            let envelope = Envelope {
                schema_version: "1.0",
                command: "region",
                inputs: RegionInputs {
                    system,
                    samples: args.samples,
                    seed,
                    format: "json",
                },
                results: serde_json::json!({ "points": points }),
            };
            envelope.to_json()?
        }
    };
    write_output(args.out.as_deref(), &content)?;
    Ok(ExitCode::SUCCESS)
}

// --- atomic -----------------------------------------------------------------

#[derive(Serialize)]
struct AtomicInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    populations: Option<[f64; 3]>,
    pair: String,
}

fn cmd_atomic(args: AtomicArgs) -> Result<ExitCode, AppError> {
    let pair = parse_pair(&args.pair)?;
    let (inputs, value) = if let Some(preset_arg) = args.source.preset {
        let preset: AtomicPreset = preset_arg.into();
        let table = preset_min_sums(preset);
        let value = table
            .iter()
            .find(|(candidate, _)| *candidate == pair)
            .map(|(_, value)| *value)
            .ok_or_else(|| {
                let available: Vec<String> =
                    table.iter().map(|(p, _)| p.to_string()).collect();
                AppError::Usage(format!(
                    "preset {preset} does not drive pair {pair}; available pairs: {}",
                    available.join(", ")
                ))
            })?;
        (
            AtomicInputs {
                preset: Some(preset.to_string()),
                populations: None,
                pair: pair.to_string(),
            },
            value,
        )
    } else {
        let pops = parse_triple(args.source.pop.as_deref().expect("clap group"), "--pop")?;
        if pops.iter().any(|&p| p < 0.0) {
            return Err(AppError::Usage(format!(
                "populations must be nonnegative, got {pops:?}"
            )));
        }
        let total: f64 = pops.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(AppError::Usage(format!(
                "populations must sum to 1, got {total}"
            )));
        }
        let value = min_uncertainty_sum(pops[pair.i() - 1], pops[pair.j() - 1])
            .map_err(|e| AppError::Usage(e.to_string()))?;
        (
            AtomicInputs {
                preset: None,
                populations: Some(pops),
                pair: pair.to_string(),
            },
            MinSum::Point(value),
        )
    };

    let results = match value {
        MinSum::Point(v) => serde_json::json!({ "pair": pair.to_string(), "min_sum": v }),
        MinSum::Interval(low, high) => serde_json::json!({
            "pair": pair.to_string(),
            "min_sum_interval": [low, high],
        }),
    };
    let envelope = Envelope {
        schema_version: "1.0",
        command: "atomic",
        inputs,
        results,
    };
    write_output(None, &envelope.to_json()?)?;
    Ok(ExitCode::SUCCESS)
}

// --- map --------------------------------------------------------------------

#[derive(Serialize)]
struct MapInputs {
    omega: f64,
    r: [f64; 3],
    emit: &'static str,
}

fn cmd_map(args: MapArgs) -> Result<ExitCode, AppError> {
    if !(0.0..=1.0).contains(&args.omega) {
        return Err(AppError::Usage(format!(
            "--omega must lie in [0, 1], got {}",
            args.omega
        )));
    }
    let raw = parse_triple(&args.r, "--r")?;
    let norm = (raw[0] * raw[0] + raw[1] * raw[1] + raw[2] * raw[2]).sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(AppError::Usage(format!(
            "--r must be a unit vector to 1e-9, got norm {norm}"
        )));
    }
    // Normalize exactly so the stricter library tolerance is met.
    let r = BlochVector::new(raw[0] / norm, raw[1] / norm, raw[2] / norm)
        .map_err(|e| AppError::Usage(e.to_string()))?;
    let qutrit =
        AppendedQutrit::new(args.omega, r).map_err(|e| AppError::Usage(e.to_string()))?;

    let (emit_name, results) = match args.emit {
        MapEmit::RhoAb => {
            let rho = qutrit_to_two_qubit(&qutrit);
            (
                "rho_ab",
                serde_json::json!({ "rho_ab": matrix_to_pairs(rho.mat()) }),
            )
        }
        MapEmit::Params => {
            let params = extract_params(&qutrit_to_two_qubit(&qutrit))
                .expect("mapped states are symmetric");
            ("params", serde_json::json!({ "params": params }))
        }
        MapEmit::Uncertainty => {
            let report = two_qubit_uncertainty(&qutrit);
            ("uncertainty", serde_json::json!({ "uncertainty": report }))
        }
        MapEmit::Concurrence => {
            let result = concurrence_general(&qutrit_to_two_qubit(&qutrit))
                .expect("mapped states are valid two-qubit states");
            ("concurrence", serde_json::json!({ "concurrence": result }))
        }
    };
    let envelope = Envelope {
        schema_version: "1.0",
        command: "map",
        inputs: MapInputs {
            omega: args.omega,
            r: raw,
            emit: emit_name,
        },
        results,
    };
    write_output(None, &envelope.to_json()?)?;
    Ok(ExitCode::SUCCESS)
}

// --- contour ------------------------------------------------------------------

#[derive(Serialize)]
struct ContourInputs {
    quantity: &'static str,
    grid: usize,
    format: &'static str,
}

fn cmd_contour(args: ContourArgs) -> Result<ExitCode, AppError> {
    if args.grid < 2 {
        return Err(AppError::Usage("--grid must be at least 2".to_string()));
    }
    let (name, grid) = match args.quantity {
        ContourQuantity::Sum => ("sum", contour_sum(args.grid)),
        ContourQuantity::Concurrence => ("concurrence", contour_concurrence(args.grid)),
        ContourQuantity::MinSumSurface => ("min-sum-surface", min_sum_surface(args.grid)),
    };
    let content = match args.format {
        OutputFormat::Csv => {
            let mut text = String::from("x,y,z\n");
            for (row, &y) in grid.z.iter().zip(&grid.y_vals) {
                for (cell, &x) in row.iter().zip(&grid.x_vals) {
                    match cell {
                        Some(z) => text.push_str(&format!("{x},{y},{z}\n")),
                        None => text.push_str(&format!("{x},{y},NaN\n")),
                    }
                }
            }
            text
        }
        OutputFormat::Json => {
            let envelope = Envelope {
                schema_version: "1.0",
                command: "contour",
                inputs: ContourInputs {
                    quantity: name,
                    grid: args.grid,
                    format: "json",
                },
                results: serde_json::json!({ "grid": grid }),
            };
            envelope.to_json()?
        }
    };
    write_output(args.out.as_deref(), &content)?;
    Ok(ExitCode::SUCCESS)
}

// --- verify ---------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, AppError> {
    let seed = resolve_seed(args.seed)?;
    let reports = match args.suite {
        SuiteArg::All => verify::run_all(seed),
        SuiteArg::Core => vec![verify::run_suite(verify::Suite::Core, seed)],
        SuiteArg::Regions => vec![verify::run_suite(verify::Suite::Regions, seed)],
        SuiteArg::Atomic => vec![verify::run_suite(verify::Suite::Atomic, seed)],
        SuiteArg::Map => vec![verify::run_suite(verify::Suite::Map, seed)],
        SuiteArg::Entanglement => {
            vec![verify::run_suite(verify::Suite::Entanglement, seed)]
        }
    };
    let mut all_passed = true;
    for report in &reports {
        println!(
            "suite {}: {} passed, {} failed",
            report.suite,
            report.passed(),
            report.failed()
        );
        for check in &report.checks {
            let status = if check.passed { "ok" } else { "FAIL" };
            println!("  {status} {}: {}", check.name, check.detail);
        }
        all_passed &= report.all_passed();
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
