//! Verification driver: runs the named suites against tetrad presets and
//! emits machine-readable reports.
//!
//! Exit codes: 0 all executed suites pass; 1 at least one suite failed
//! (failing residuals are in the report); 2 invalid configuration.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use cliff13::algebra::Mv;
use cliff13::geometry::{Geometry, GeometryPoint};
use cliff13::ideals::IdealFrame;
use cliff13::rep::gamma_map;
use cliff13::spin::{exp_series, exterior_exp, is_spin, lorentz_matrix};
use cliff13::suites::{self, SuiteReport, TetradConfig};

/// Environment variable capping the rayon worker count.
const THREADS_ENV: &str = "CLIFF13_THREADS";

#[derive(Parser)]
#[command(name = "cliff13", version, about = "Clifford/exterior-algebra verification engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ConfigArgs {
    /// Tetrad preset config (JSON file); defaults to the flat preset.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Seed for the random field streams.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Also write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full suite set across all presets and ideal indices.
    Verify {
        #[command(flatten)]
        common: ConfigArgs,
    },
    /// Dump an idempotent frame: t, ideal basis, generators, structure
    /// constants.
    Frame {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Matrix representation of a multivector, or the k=1 vector fixtures.
    Rep {
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Multivector as a JSON file mapping blade labels to [re, im].
        #[arg(long, conflicts_with = "fixtures")]
        input: Option<PathBuf>,
        /// Emit gamma(e^a) for k = 1 in the documented JSON layout.
        #[arg(long)]
        fixtures: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a spin element from a grade-2 generator and report membership
    /// residuals and the induced Lorentz matrix.
    Spin {
        /// Generator as inline JSON, e.g. '{"12": [0.3, 0.0]}'.
        #[arg(long)]
        generator: String,
        /// Use the closed-form exterior exponent instead of the series.
        #[arg(long)]
        exterior: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-point metric/connection/curvature diagnostics as CSV.
    Geometry {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        points: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Covariant-operator identity suites on a preset.
    Calculus {
        #[command(flatten)]
        common: ConfigArgs,
        /// Suite: "identities", "geometry" or "all".
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Field-equation suites on a preset.
    Equations {
        #[command(flatten)]
        common: ConfigArgs,
        /// Ideal index; omit to run every supported index.
        #[arg(long)]
        k: Option<usize>,
        /// Suite: tmp | ym | gauge | bridge | even.
        #[arg(long)]
        suite: String,
        /// Also export the rest-frame solution fixture as CSV
        /// (x, then Re/Im of every wave coordinate).
        #[arg(long)]
        export_fixture: Option<PathBuf>,
    },
}

/// Top-level report shape. The timestamp is excluded from determinism
/// comparisons; everything else is a function of (config, seed).
#[derive(Serialize)]
struct Report {
    tool: &'static str,
    version: &'static str,
    seed: u64,
    config: Option<TetradConfig>,
    suites: Vec<SuiteReport>,
    pass: bool,
    timestamp_unix: u64,
}

impl Report {
    fn new(seed: u64, config: Option<TetradConfig>, suites: Vec<SuiteReport>) -> Report {
        Report {
            tool: "cliff13",
            version: env!("CARGO_PKG_VERSION"),
            seed,
            config,
            pass: suites.iter().all(|s| s.pass),
            suites,
            timestamp_unix: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<TetradConfig> {
    match path {
        None => Ok(TetradConfig::Flat),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading config {}", p.display()))?;
            let config: TetradConfig = serde_json::from_str(&text)
                .with_context(|| format!("config {} does not match the published schema (schema/tetrad_config.schema.json)", p.display()))?;
            // surface generator problems now rather than inside a suite
            config.build().map_err(|e| anyhow!("invalid preset parameters: {e}"))?;
            Ok(config)
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    println!("{text}");
    if let Some(path) = out {
        let mut file = std::fs::File::create(path)
            .with_context(|| format!("creating {}", path.display()))?;
        file.write_all(text.as_bytes())?;
        file.write_all(b"\n")?;
    }
    Ok(())
}

fn finish_report(report: Report, out: &Option<PathBuf>) -> Result<ExitCode> {
    let text = serde_json::to_string_pretty(&report)?;
    emit(&text, out)?;
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn configure_threads() {
    if let Ok(value) = std::env::var(THREADS_ENV) {
        if let Ok(n) = value.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
}

fn run_verify(common: &ConfigArgs) -> Result<ExitCode> {
    configure_threads();
    use rayon::prelude::*;
    // Suites are independent and internally seeded; run the heavy tail in
    // parallel and keep the report order fixed.
    let seed = common.seed;
    let jobs: Vec<Box<dyn Fn() -> SuiteReport + Send + Sync>> = {
        let mut jobs: Vec<Box<dyn Fn() -> SuiteReport + Send + Sync>> = vec![
            Box::new(suites::rep_fixture_suite),
            Box::new(suites::matrix_units_suite),
            Box::new(move || suites::algebra_suite(seed)),
            Box::new(move || suites::spin_suite(seed ^ 0x5049)),
            Box::new(suites::ideals_suite),
            Box::new(move || suites::geometry_oracle_suite(seed ^ 0x47454f)),
            Box::new(suites::rest_frame_fixture_suite),
        ];
        for config in TetradConfig::defaults() {
            let c = config.clone();
            jobs.push(Box::new(move || suites::geometry_exact_suite(&c, seed ^ 0x11)));
            let c = config.clone();
            jobs.push(Box::new(move || suites::calculus_suite(&c, seed ^ 0x22)));
        }
        for config in TetradConfig::defaults().into_iter().take(2) {
            let c = config.clone();
            jobs.push(Box::new(move || suites::equations_tmp_suite(&c, &[1, 2], seed ^ 0x33)));
            let c = config.clone();
            jobs.push(Box::new(move || suites::equations_ym_suite(&c, &[1, 2], seed ^ 0x44)));
            let c = config.clone();
            jobs.push(Box::new(move || suites::bridge_suite(&c, &[1, 2, 3, 4], seed ^ 0x55)));
            let c = config.clone();
            jobs.push(Box::new(move || suites::gauge_suite(&c, &[1, 2], seed ^ 0x66)));
            let c = config.clone();
            jobs.push(Box::new(move || suites::even_suite(&c, &[1, 2], seed ^ 0x77)));
        }
        jobs
    };
    let reports: Vec<SuiteReport> = jobs.par_iter().map(|job| job()).collect();
    finish_report(Report::new(seed, None, reports), &common.out)
}

#[derive(Serialize)]
struct FrameDump {
    k: usize,
    dim_complex: usize,
    t: Mv,
    basis: Vec<Mv>,
    generators: Vec<Mv>,
    structure_constants: Vec<Vec<Vec<f64>>>,
}

fn run_frame(k: usize, out: &Option<PathBuf>) -> Result<ExitCode> {
    let frame = IdealFrame::new(k).map_err(|e| anyhow!("{e}"))?;
    let dump = FrameDump {
        k,
        dim_complex: frame.dim_complex(),
        t: frame.t.clone(),
        basis: frame.basis.clone(),
        generators: frame.generators.taus.clone(),
        structure_constants: frame.generators.structure.clone(),
    };
    emit(&serde_json::to_string_pretty(&dump)?, out)?;
    Ok(ExitCode::SUCCESS)
}

fn run_rep(
    k: usize,
    input: &Option<PathBuf>,
    fixtures: bool,
    out: &Option<PathBuf>,
) -> Result<ExitCode> {
    if fixtures {
        let dump: BTreeMap<String, Vec<Vec<[f64; 2]>>> =
            suites::gamma_fixture_json().into_iter().collect();
        emit(&serde_json::to_string_pretty(&dump)?, out)?;
        return Ok(ExitCode::SUCCESS);
    }
    let path = input.as_ref().ok_or_else(|| anyhow!("--input or --fixtures required"))?;
    let text = std::fs::read_to_string(path)?;
    let mv: Mv = serde_json::from_str(&text).context("multivector JSON")?;
    let frame = IdealFrame::new(k).map_err(|e| anyhow!("{e}"))?;
    let matrix = gamma_map(&frame, &mv);
    emit(&serde_json::to_string_pretty(&suites::rep_matrix_json(&matrix))?, out)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SpinDump {
    element: Mv,
    odd_norm: f64,
    unitarity_residual: f64,
    is_spin: bool,
    lorentz: [[f64; 4]; 4],
    lorentz_invariant_residual: f64,
}

fn run_spin(generator: &str, exterior: bool, out: &Option<PathBuf>) -> Result<ExitCode> {
    let gen: Mv = serde_json::from_str(generator).context("generator JSON")?;
    let element = if exterior {
        exterior_exp(&gen).map_err(|e| anyhow!("{e}"))?
    } else {
        exp_series(&gen, 1e-14).map_err(|e| anyhow!("{e}"))?
    };
    let (ok, odd, unit) = is_spin(element.value(), cliff13::EPS_SPIN);
    let p = lorentz_matrix(&element).map_err(|e| anyhow!("{e}"))?;
    let dump = SpinDump {
        element: element.value().clone(),
        odd_norm: odd,
        unitarity_residual: unit,
        is_spin: ok,
        lorentz: std::array::from_fn(|a| std::array::from_fn(|b| p.0[(a, b)])),
        lorentz_invariant_residual: p.invariant_residual(),
    };
    emit(&serde_json::to_string_pretty(&dump)?, out)?;
    Ok(ExitCode::SUCCESS)
}

fn run_geometry(
    config: &Option<PathBuf>,
    points: usize,
    seed: u64,
    out: &Option<PathBuf>,
) -> Result<ExitCode> {
    let config = load_config(config)?;
    let tetrad = config.build().map_err(|e| anyhow!(e))?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut csv = String::new();
    csv.push_str("x0,x1,x2,x3");
    for mu in 0..4 {
        for nu in 0..4 {
            csv.push_str(&format!(",g{mu}{nu}"));
        }
    }
    csv.push_str(",sqrt_neg_g,gamma_sup,riemann_sup,ricci_sup,scalar_curvature\n");
    for x in cliff13::fields::sample_points(&mut rng, points) {
        let geo = Geometry::at(&tetrad, &x).map_err(|e| anyhow!("{e}"))?;
        let point = GeometryPoint::from_geometry(&geo);
        csv.push_str(&format!("{},{},{},{}", x[0], x[1], x[2], x[3]));
        for mu in 0..4 {
            for nu in 0..4 {
                csv.push_str(&format!(",{}", point.g[mu][nu]));
            }
        }
        let gamma_sup = point
            .gamma
            .iter()
            .flatten()
            .flatten()
            .fold(0.0f64, |acc, v| acc.max(v.abs()));
        let riemann_sup = point
            .riemann
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .fold(0.0f64, |acc, v| acc.max(v.abs()));
        let ricci_sup =
            point.ricci.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
        csv.push_str(&format!(
            ",{},{},{},{},{}\n",
            point.sqrt_neg_g, gamma_sup, riemann_sup, ricci_sup, point.scalar_curvature
        ));
    }
    print!("{csv}");
    if let Some(path) = out {
        std::fs::write(path, csv)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run_calculus(common: &ConfigArgs, suite: &str) -> Result<ExitCode> {
    let config = load_config(&common.config)?;
    let mut reports = Vec::new();
    match suite {
        "identities" => reports.push(suites::calculus_suite(&config, common.seed)),
        "geometry" => reports.push(suites::geometry_exact_suite(&config, common.seed)),
        "all" => {
            reports.push(suites::calculus_suite(&config, common.seed));
            reports.push(suites::geometry_exact_suite(&config, common.seed));
        }
        other => return Err(anyhow!("unknown calculus suite {other:?}")),
    }
    finish_report(Report::new(common.seed, Some(config), reports), &common.out)
}

fn export_solution_fixture(path: &PathBuf, k: usize, seed: u64) -> Result<()> {
    let frame = std::sync::Arc::new(IdealFrame::new(k).map_err(|e| anyhow!("{e}"))?);
    let mass = 0.7;
    let wave = cliff13::equations::WaveField::rest_frame_solution(frame.clone(), mass);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut csv = String::from("x0,x1,x2,x3");
    for i in 0..frame.dim_complex() {
        csv.push_str(&format!(",re_psi{i},im_psi{i}"));
    }
    csv.push('\n');
    for x in cliff13::fields::sample_points(&mut rng, 32) {
        let value = wave.eval(&cliff13::jet::coordinate_jets(&x)).value_mv();
        let coords = frame.coordinates(&value);
        csv.push_str(&format!("{},{},{},{}", x[0], x[1], x[2], x[3]));
        for c in coords {
            csv.push_str(&format!(",{},{}", c.re, c.im));
        }
        csv.push('\n');
    }
    std::fs::write(path, csv)?;
    Ok(())
}

fn run_equations(
    common: &ConfigArgs,
    k: Option<usize>,
    suite: &str,
    export_fixture: &Option<PathBuf>,
) -> Result<ExitCode> {
    let config = load_config(&common.config)?;
    let ks: Vec<usize> = match (suite, k) {
        ("even", Some(k)) if !(1..=2).contains(&k) => {
            return Err(anyhow!("--suite even supports k = 1 or 2"))
        }
        (_, Some(k)) if !(1..=4).contains(&k) => return Err(anyhow!("k must be in 1..=4")),
        ("even", None) => vec![1, 2],
        ("bridge", None) => vec![1, 2, 3, 4],
        (_, None) => vec![1, 2],
        (_, Some(k)) => vec![k],
    };
    if let Some(path) = export_fixture {
        export_solution_fixture(path, k.unwrap_or(1), common.seed)?;
    }
    let report = suites::equations_suite_by_name(suite, &config, &ks, common.seed)
        .ok_or_else(|| anyhow!("unknown equations suite {suite:?}"))?;
    finish_report(Report::new(common.seed, Some(config), vec![report]), &common.out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { common } => run_verify(common),
        Command::Frame { k, out } => run_frame(*k, out),
        Command::Rep { k, input, fixtures, out } => run_rep(*k, input, *fixtures, out),
        Command::Spin { generator, exterior, out } => run_spin(generator, *exterior, out),
        Command::Geometry { config, points, seed, out } => run_geometry(config, *points, *seed, out),
        Command::Calculus { common, suite } => run_calculus(common, suite),
        Command::Equations { common, k, suite, export_fixture } => {
            run_equations(common, *k, suite, export_fixture)
        }
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
