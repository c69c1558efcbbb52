//! Command-line front end: wires geometry, oracle, expansion, and Monte
//! Carlo into reproducible experiments with CSV/JSON output.
//!
//! Exit codes: 0 success, 2 input error, 3 configuration error (including
//! domain-size violations), 4 acceptance failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::config::{self, Config};
use crate::expansion::{sfh_expansion_2d, tangent_pair_expansion};
use crate::geometry2d::{self, tangent_pair_intersection_area, PlanarSet};
use crate::geometry3d::{self, polytope_coefficients, Box3, PolytopeSummary};
use crate::monte_carlo::{estimate_exceedance, MCError, MCParams};
use crate::tube_oracle::{
    default_grid_2d, default_grid_3d, distance_field_2d, distance_field_3d, fit_steiner,
};
use crate::{expansion, fixtures};

#[derive(Parser)]
#[command(
    name = "gausstail",
    version,
    about = "Tail expansions and Monte Carlo for maxima of smooth Gaussian fields over planar and box-union sets"
)]
struct Cli {
    /// Tolerance/resolution config file (JSON); defaults are built in.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact Steiner coefficients of a geometry file as JSON.
    Coeffs {
        #[arg(long)]
        geometry: PathBuf,
        /// Also fit coefficients with the tube-volume oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the tail expansion over a level grid as CSV.
    Expand {
        #[arg(long)]
        geometry: PathBuf,
        #[arg(long)]
        u_min: f64,
        #[arg(long)]
        u_max: f64,
        #[arg(long)]
        u_step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo exceedance estimates vs. the expansion.
    Simulate {
        #[arg(long)]
        geometry: PathBuf,
        /// Comma-separated levels, e.g. "1.5,2,2.5".
        #[arg(long)]
        levels: String,
        #[arg(long)]
        replicates: Option<u64>,
        /// Discretization step (curves; interiors use twice this).
        #[arg(long)]
        grid_h: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate every built-in worked example, exact vs. oracle.
    Examples {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    /// Bad input (geometry, flags): exit 2.
    Input(String),
    /// Bad configuration (config file, threads, domain size): exit 3.
    Config(String),
    /// Tolerance failure in an acceptance-style run: exit 4.
    Acceptance(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Config(_) => 3,
            CliError::Acceptance(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Config(m) | CliError::Acceptance(m) => m,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    init_thread_pool()?;
    let config = config::load(cli.config.as_deref()).map_err(|e| CliError::Config(e.to_string()))?;
    match cli.command {
        Command::Coeffs {
            geometry,
            oracle,
            out,
        } => cmd_coeffs(&geometry, oracle, out.as_deref(), &config),
        Command::Expand {
            geometry,
            u_min,
            u_max,
            u_step,
            out,
        } => cmd_expand(&geometry, u_min, u_max, u_step, out.as_deref()),
        Command::Simulate {
            geometry,
            levels,
            replicates,
            grid_h,
            seed,
            out,
        } => cmd_simulate(
            &geometry,
            &levels,
            replicates.unwrap_or(config.mc_replicates),
            grid_h.unwrap_or(config.mc_h),
            seed,
            out.as_deref(),
        ),
        Command::Examples { out } => cmd_examples(out.as_deref(), &config),
    }
}

/// GAUSSTAIL_THREADS caps the worker count; affects speed only, never
/// results (the Monte Carlo reduction is index-ordered).
fn init_thread_pool() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("GAUSSTAIL_THREADS") {
        let n: usize = v.parse().map_err(|_| {
            CliError::Config(format!("GAUSSTAIL_THREADS must be a positive integer, got {v:?}"))
        })?;
        if n == 0 {
            return Err(CliError::Config(
                "GAUSSTAIL_THREADS must be a positive integer, got 0".into(),
            ));
        }
        // Ignore the error from double initialization (e.g. in tests).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Geometry loading
// ---------------------------------------------------------------------------

enum Geometry {
    Planar(PlanarSet),
    Solid {
        summary: PolytopeSummary,
        boxes: Option<Vec<Box3>>,
    },
}

fn load_geometry(path: &Path) -> Result<(Geometry, String), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let doc: serde_json::Value = serde_json::from_str(&text).map_err(input)?;
    let dimension = doc
        .get("dimension")
        .and_then(|d| d.as_u64())
        .ok_or_else(|| CliError::Input("geometry file lacks a \"dimension\" field".into()))?;
    let geometry = match dimension {
        2 => Geometry::Planar(geometry2d::json::validate_set(&text).map_err(input)?),
        3 => {
            let summary = geometry3d::json::validate_set(&text).map_err(input)?;
            let boxes = match doc.get("boxes") {
                Some(b) => Some(serde_json::from_value::<Vec<Box3>>(b.clone()).map_err(input)?),
                None => None,
            };
            Geometry::Solid { summary, boxes }
        }
        d => return Err(CliError::Input(format!("unsupported dimension {d}"))),
    };
    Ok((geometry, text))
}

// ---------------------------------------------------------------------------
// Manifest and output plumbing
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
pub struct RunManifest {
    pub command: String,
    pub input_sha256: Option<String>,
    pub seed: Option<u64>,
    pub parameters: serde_json::Value,
    pub version: &'static str,
    pub wall_time_seconds: f64,
}

fn manifest(
    command: &str,
    input: Option<&str>,
    seed: Option<u64>,
    parameters: serde_json::Value,
    started: Instant,
) -> RunManifest {
    RunManifest {
        command: command.to_string(),
        input_sha256: input.map(|text| {
            let mut hasher = Sha256::new();
            hasher.update(text.as_bytes());
            format!("{:x}", hasher.finalize())
        }),
        seed,
        parameters,
        version: env!("CARGO_PKG_VERSION"),
        wall_time_seconds: started.elapsed().as_secs_f64(),
    }
}

/// 17 significant digits, '.' decimal; enough to round-trip any f64.
fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_text(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Data files keep the manifest in a sidecar so repeated runs stay
/// byte-identical (the manifest carries wall time).
fn write_manifest_sidecar(out: Option<&Path>, m: &RunManifest) -> Result<(), CliError> {
    if let Some(p) = out {
        let mut side = p.as_os_str().to_owned();
        side.push(".manifest.json");
        let text = serde_json::to_string_pretty(m).expect("manifest serializes");
        fs::write(&side, text)
            .map_err(|e| CliError::Input(format!("cannot write manifest sidecar: {e}")))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// coeffs
// ---------------------------------------------------------------------------

fn cmd_coeffs(
    path: &Path,
    oracle: bool,
    out: Option<&Path>,
    config: &Config,
) -> Result<(), CliError> {
    let started = Instant::now();
    let (geometry, text) = load_geometry(path)?;
    let mut report = json!({});
    match &geometry {
        Geometry::Planar(set) => {
            report["exact"] = serde_json::to_value(set.steiner_coefficients()).unwrap();
            if oracle {
                let (fit, coeffs) = oracle_fit_2d(set, config)?;
                report["fitted"] = serde_json::to_value(coeffs).unwrap();
                report["fit_residual"] = json!(fit.residual);
            }
        }
        Geometry::Solid { summary, boxes } => {
            let coeffs = polytope_coefficients(summary).map_err(input)?;
            report["exact"] = serde_json::to_value(&coeffs).unwrap();
            if oracle {
                let boxes = boxes.as_ref().ok_or_else(|| {
                    CliError::Input(
                        "--oracle for 3D geometry needs an explicit \"boxes\" list".into(),
                    )
                })?;
                let (l3, l2, l1, residual) = oracle_fit_3d(boxes, summary, config)?;
                report["fitted"] = json!({"l1": l1, "l2": l2, "l3": l3});
                report["fit_residual"] = json!(residual);
            }
        }
    }
    report["manifest"] = serde_json::to_value(manifest(
        "coeffs",
        Some(&text),
        None,
        json!({"geometry": path.display().to_string(), "oracle": oracle}),
        started,
    ))
    .unwrap();
    let mut text = serde_json::to_string_pretty(&report).unwrap();
    text.push('\n');
    write_text(out, &text)
}

fn oracle_fit_2d(
    set: &PlanarSet,
    config: &Config,
) -> Result<(crate::tube_oracle::SteinerFit, crate::geometry2d::SteinerCoeffs2D), CliError> {
    let (h, eps) = default_grid_2d(set);
    let margin = eps.last().copied().unwrap() * 1.05;
    let field = distance_field_2d(set, margin, h, config.oracle_cell_cap)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let fit = fit_steiner(&field, &eps, Some(set.area()))
        .map_err(|e| CliError::Config(e.to_string()))?;
    let coeffs = fit.to_coeffs_2d();
    Ok((fit, coeffs))
}

fn oracle_fit_3d(
    boxes: &[Box3],
    summary: &PolytopeSummary,
    config: &Config,
) -> Result<(f64, f64, f64, f64), CliError> {
    let diameter = box_diameter(boxes);
    let (h, eps) = default_grid_3d(diameter);
    let margin = eps.last().copied().unwrap() * 1.05;
    let field = distance_field_3d(boxes, margin, h, config.oracle_cell_cap)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let fit = fit_steiner(&field, &eps, Some(summary.volume))
        .map_err(|e| CliError::Config(e.to_string()))?;
    let (l3, l2, l1) = fit.to_coeffs_3d();
    Ok((l3, l2, l1, fit.residual))
}

fn box_diameter(boxes: &[Box3]) -> f64 {
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for b in boxes {
        for a in 0..3 {
            lo[a] = lo[a].min(b.min[a]);
            hi[a] = hi[a].max(b.max[a]);
        }
    }
    (0..3).map(|a| (hi[a] - lo[a]).powi(2)).sum::<f64>().sqrt()
}

// ---------------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------------

fn level_grid(u_min: f64, u_max: f64, u_step: f64) -> Result<Vec<f64>, CliError> {
    if !(u_step > 0.0) || !(u_max >= u_min) || !u_min.is_finite() || !u_max.is_finite() {
        return Err(CliError::Input(format!(
            "need u-min <= u-max and u-step > 0, got {u_min}..{u_max} step {u_step}"
        )));
    }
    let mut grid = Vec::new();
    let mut i = 0u64;
    loop {
        let u = u_min + i as f64 * u_step;
        if u > u_max + 1e-12 {
            break;
        }
        grid.push(u);
        i += 1;
    }
    Ok(grid)
}

fn cmd_expand(
    path: &Path,
    u_min: f64,
    u_max: f64,
    u_step: f64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let started = Instant::now();
    let (geometry, text) = load_geometry(path)?;
    let grid = level_grid(u_min, u_max, u_step)?;
    let mut csv = String::new();
    match &geometry {
        Geometry::Planar(set) => {
            let coeffs = set.steiner_coefficients();
            csv.push_str("u,term_L0,term_L1,term_sigma2,total\n");
            for &u in &grid {
                let r = sfh_expansion_2d(&coeffs, u);
                let term = |n: &str| r.term(n).map_or(0.0, |t| t.product);
                csv.push_str(&format!(
                    "{},{},{},{},{}\n",
                    fmt17(u),
                    fmt17(term("L0")),
                    fmt17(term("L1")),
                    fmt17(term("sigma2")),
                    fmt17(r.total),
                ));
            }
        }
        Geometry::Solid { summary, .. } => {
            let coeffs = polytope_coefficients(summary).map_err(input)?;
            csv.push_str("u,term_L1,term_L2,term_L3,total\n");
            for &u in &grid {
                let r = expansion::expansion_3d(&coeffs, u).map_err(input)?;
                let term = |n: &str| r.term(n).map_or(0.0, |t| t.product);
                csv.push_str(&format!(
                    "{},{},{},{},{}\n",
                    fmt17(u),
                    fmt17(term("L1")),
                    fmt17(term("L2")),
                    fmt17(term("L3")),
                    fmt17(r.total),
                ));
            }
        }
    }
    write_text(out, &csv)?;
    write_manifest_sidecar(
        out,
        &manifest(
            "expand",
            Some(&text),
            None,
            json!({"geometry": path.display().to_string(),
                   "u_min": u_min, "u_max": u_max, "u_step": u_step}),
            started,
        ),
    )
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

fn parse_levels(levels: &str) -> Result<Vec<f64>, CliError> {
    let parsed: Result<Vec<f64>, _> = levels
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect();
    let list = parsed.map_err(|_| CliError::Input(format!("cannot parse levels {levels:?}")))?;
    if list.is_empty() || list.iter().any(|u| !u.is_finite()) {
        return Err(CliError::Input(format!("invalid levels {levels:?}")));
    }
    Ok(list)
}

fn mc_error(e: MCError) -> CliError {
    match e {
        MCError::DomainTooLarge { .. } => CliError::Config(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

fn cmd_simulate(
    path: &Path,
    levels: &str,
    replicates: u64,
    grid_h: f64,
    seed: u64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let started = Instant::now();
    let (geometry, text) = load_geometry(path)?;
    let set = match &geometry {
        Geometry::Planar(set) => set,
        Geometry::Solid { .. } => {
            return Err(CliError::Input(
                "simulate supports 2D geometry only".into(),
            ))
        }
    };
    let u_list = parse_levels(levels)?;
    let coeffs = set.steiner_coefficients();
    let params = MCParams {
        replicates,
        h: grid_h,
        seed,
        diagnostics: true,
        ..MCParams::default()
    };
    let estimates = estimate_exceedance(set, &u_list, &params).map_err(mc_error)?;
    // Discretization sensitivity: half the step at a tenth of the budget.
    let sens_params = MCParams {
        replicates: (replicates / 10).max(1),
        h: grid_h / 2.0,
        diagnostics: false,
        ..params
    };
    let sensitivity = estimate_exceedance(set, &u_list, &sens_params).map_err(mc_error)?;

    let mut csv = String::from(
        "u,p_hat,se,expansion,ratio,diagnosed,a1,a2,a3,a4,sandwich_checked,sandwich_failed\n",
    );
    let mut rows = Vec::new();
    for est in &estimates {
        let expansion_total = sfh_expansion_2d(&coeffs, est.u).total;
        let ratio = est.p_hat / expansion_total;
        let d = est.diagnostics;
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            fmt17(est.u),
            fmt17(est.p_hat),
            fmt17(est.standard_error),
            fmt17(expansion_total),
            fmt17(ratio),
            d.diagnosed,
            d.a1,
            d.a2,
            d.a3,
            d.a4,
            d.sandwich_checked,
            d.sandwich_failed,
        ));
        rows.push(json!({
            "u": est.u,
            "p_hat": est.p_hat,
            "se": est.standard_error,
            "expansion": expansion_total,
            "ratio": ratio,
            "diagnostics": serde_json::to_value(d).unwrap(),
        }));
    }
    write_text(out, &csv)?;

    if let Some(p) = out {
        let record = json!({
            "manifest": serde_json::to_value(manifest(
                "simulate",
                Some(&text),
                Some(seed),
                json!({"geometry": path.display().to_string(), "levels": u_list,
                       "replicates": replicates, "grid_h": grid_h}),
                started,
            )).unwrap(),
            "rows": rows,
            "sensitivity": sensitivity.iter().map(|e| json!({
                "u": e.u, "p_hat": e.p_hat, "se": e.standard_error, "h": e.h,
                "replicates": e.replicates,
            })).collect::<Vec<_>>(),
        });
        let mut side = p.as_os_str().to_owned();
        side.push(".json");
        fs::write(&side, serde_json::to_string_pretty(&record).unwrap())
            .map_err(|e| CliError::Input(format!("cannot write JSON record: {e}")))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// examples
// ---------------------------------------------------------------------------

struct ExampleRow {
    name: &'static str,
    quantity: &'static str,
    exact: f64,
    check: f64,
    tolerance: f64,
    /// Absolute comparison when true, relative otherwise.
    absolute: bool,
}

impl ExampleRow {
    fn error(&self) -> f64 {
        if self.absolute {
            (self.check - self.exact).abs()
        } else {
            (self.check - self.exact).abs() / self.exact.abs().max(f64::MIN_POSITIVE)
        }
    }

    fn pass(&self) -> bool {
        self.error() <= self.tolerance
    }
}

fn coeff_rows(
    name: &'static str,
    set: &PlanarSet,
    config: &Config,
    rows: &mut Vec<ExampleRow>,
) -> Result<(), CliError> {
    let exact = set.steiner_coefficients();
    let (_, fitted) = oracle_fit_2d(set, config)?;
    let sigma2_zero = exact.sigma2 == 0.0;
    rows.push(ExampleRow {
        name,
        quantity: "sigma2",
        exact: exact.sigma2,
        check: fitted.sigma2,
        tolerance: if sigma2_zero {
            config.sigma2_abs_tol
        } else {
            config.sigma2_rel_tol
        },
        absolute: sigma2_zero,
    });
    rows.push(ExampleRow {
        name,
        quantity: "L1",
        exact: exact.l1,
        check: fitted.l1,
        tolerance: config.l1_rel_tol,
        absolute: false,
    });
    rows.push(ExampleRow {
        name,
        quantity: "L0",
        exact: exact.l0,
        check: fitted.l0,
        tolerance: config.l0_abs_tol,
        absolute: true,
    });
    Ok(())
}

fn cmd_examples(out: Option<&Path>, config: &Config) -> Result<(), CliError> {
    use std::f64::consts::PI;
    let mut rows = Vec::new();

    // Planar worked examples: exact coefficients vs. the tube oracle.
    coeff_rows("angle(pi/2)", &fixtures::angle(PI / 2.0, 1.0), config, &mut rows)?;
    coeff_rows(
        "multi_angle",
        &fixtures::multi_angle(&[PI / 2.0, 2.0 * PI / 3.0], 1.0),
        config,
        &mut rows,
    )?;
    coeff_rows("empty_square", &fixtures::empty_square(), config, &mut rows)?;
    coeff_rows(
        "whiskered_square",
        &fixtures::whiskered_square(1.0),
        config,
        &mut rows,
    )?;
    coeff_rows("unit_square", &fixtures::unit_square(), config, &mut rows)?;
    coeff_rows("disk", &fixtures::disk(1.0), config, &mut rows)?;

    // Tangent pair: closed-form intersection area vs. its two-term law
    // over a decade of tube widths.
    let mut worst = 0.0f64;
    for i in 0..8 {
        let eps = 1e-3 * 10f64.powf(i as f64 / 7.0);
        let a = tangent_pair_intersection_area(1.0, eps).map_err(input)?;
        worst = worst.max((a.exact / a.asymptotic - 1.0).abs());
    }
    rows.push(ExampleRow {
        name: "tangent_pair",
        quantity: "area_law_rel_err",
        exact: 0.0,
        check: worst,
        tolerance: config.tangent_rel_tol,
        absolute: true,
    });
    // Tangent-pair expansion reproduces the u^{-1/2} coefficient
    // 8 sqrt(R) Gamma(7/4) / (2^{1/4} 3 pi).
    let te = tangent_pair_expansion(1.0, 1.0, 1.0, 2.5).map_err(input)?;
    let joint_coeff = -te.term("joint").unwrap().coefficient;
    rows.push(ExampleRow {
        name: "tangent_pair",
        quantity: "u^{-1/2} coefficient",
        exact: 0.656_003_897_333_752_9,
        check: joint_coeff,
        tolerance: config.exact_rel_tol,
        absolute: false,
    });

    // Dihedral: shared-edge subtraction constant at a right angle.
    let sub = geometry3d::dihedral_subtraction_constant(PI / 2.0).map_err(input)?;
    rows.push(ExampleRow {
        name: "dihedral(pi/2)",
        quantity: "edge constant",
        exact: 1.068_309_886_183_790_7,
        check: sub,
        tolerance: config.exact_rel_tol,
        absolute: false,
    });

    // Box-union solids: exact edge formula vs. the 3D tube oracle.
    let cube = vec![Box3 {
        min: [0.0; 3],
        max: [1.0; 3],
    }];
    solid_rows("cube", &cube, config, &mut rows)?;
    let lshape = vec![
        Box3 {
            min: [0.0, 0.0, 0.0],
            max: [2.0, 1.0, 1.0],
        },
        Box3 {
            min: [0.0, 1.0, 0.0],
            max: [1.0, 2.0, 1.0],
        },
    ];
    solid_rows("l_shape", &lshape, config, &mut rows)?;

    // Report.
    let mut table = format!(
        "{:<18} {:<22} {:>24} {:>24} {:>12} {:>6}\n",
        "example", "quantity", "exact", "check", "error", "pass"
    );
    let mut failures = Vec::new();
    for r in &rows {
        table.push_str(&format!(
            "{:<18} {:<22} {:>24} {:>24} {:>12.3e} {:>6}\n",
            r.name,
            r.quantity,
            fmt17(r.exact),
            fmt17(r.check),
            r.error(),
            if r.pass() { "ok" } else { "FAIL" }
        ));
        if !r.pass() {
            failures.push(format!(
                "{} {}: exact {} vs {} (error {:.3e} > tolerance {:.3e})",
                r.name,
                r.quantity,
                r.exact,
                r.check,
                r.error(),
                r.tolerance
            ));
        }
    }
    write_text(out, &table)?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Acceptance(format!(
            "{} example row(s) out of tolerance:\n{}",
            failures.len(),
            failures.join("\n")
        )))
    }
}

fn solid_rows(
    name: &'static str,
    boxes: &[Box3],
    config: &Config,
    rows: &mut Vec<ExampleRow>,
) -> Result<(), CliError> {
    let summary = geometry3d::box_union(boxes).map_err(input)?;
    let exact = polytope_coefficients(&summary).map_err(input)?;
    let (_, l2, l1, _) = oracle_fit_3d(boxes, &summary, config)?;
    rows.push(ExampleRow {
        name,
        quantity: "L1",
        exact: exact.l1,
        check: l1,
        tolerance: config.coeff_3d_rel_tol,
        absolute: false,
    });
    rows.push(ExampleRow {
        name,
        quantity: "L2",
        exact: exact.l2,
        check: l2,
        tolerance: config.coeff_3d_rel_tol,
        absolute: false,
    });
    Ok(())
}
