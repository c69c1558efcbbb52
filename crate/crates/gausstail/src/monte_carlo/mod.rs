//! Monte Carlo estimation of exceedance probabilities of the random-wave
//! field over discretized planar sets, plus the excursion-set diagnostics
//! that justify the local-maximum picture.

use rayon::prelude::*;
use thiserror::Error;

use crate::field_sim::{make_field, BasisCache, FieldError, RandomWaveField, DEFAULT_K};
use crate::geometry2d::{Component, PlanarSet};
use crate::point::Point;


/// Largest admissible set diameter: beyond this the finite-K covariance
/// drifts from its isotropic limit (almost-periodicity).
pub const DOMAIN_LIMIT: f64 = 4.0;

#[derive(Debug, Error)]
pub enum MCError {
    #[error("set diameter {diameter} exceeds the covariance validity limit {limit}")]
    DomainTooLarge { diameter: f64, limit: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy)]
pub struct MCParams {
    pub replicates: u64,
    /// Arc-length step on curves and boundaries; interiors use 2h.
    pub h: f64,
    pub seed: u64,
    pub k: usize,
    /// When true, run excursion diagnostics on (at most `diagnostics_cap`)
    /// replicates whose maximum exceeds the level.
    pub diagnostics: bool,
    pub diagnostics_cap: u64,
}

impl Default for MCParams {
    fn default() -> MCParams {
        MCParams {
            replicates: 100_000,
            h: 0.005,
            seed: 0,
            k: DEFAULT_K,
            diagnostics: false,
            diagnostics_cap: 200,
        }
    }
}

/// Counts of the negligible events that the local-maximum picture
/// excludes, over the diagnosed replicates.
#[derive(Debug, Clone, Copy, Default, serde::Serialize)]
pub struct Diagnostics {
    pub diagnosed: u64,
    pub a1: u64,
    pub a2: u64,
    pub a3: u64,
    pub a4: u64,
    pub sandwich_checked: u64,
    pub sandwich_failed: u64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct MCEstimate {
    pub u: f64,
    pub p_hat: f64,
    pub replicates: u64,
    pub standard_error: f64,
    pub h: f64,
    pub diagnostics: Diagnostics,
}

/// Discretize a planar set: cell centers of a 2h grid inside region
/// interiors, arc-length samples every h on all edges, point components
/// as-is.
pub fn sample_points(set: &PlanarSet, h: f64) -> Vec<Point> {
    let mut pts = Vec::new();
    for e in set.all_edges() {
        e.sample(h, &mut pts);
    }
    for c in &set.components {
        if let Component::Point(p) = c {
            pts.push(*p);
        }
    }
    let rings = set.region_rings(h * 0.1);
    if !rings.is_empty() {
        let (lo, hi) = set.bounding_box();
        let step = 2.0 * h;
        let nx = ((hi.x - lo.x) / step).ceil() as usize;
        let ny = ((hi.y - lo.y) / step).ceil() as usize;
        for j in 0..ny {
            for i in 0..nx {
                let p = Point::new(
                    lo.x + (i as f64 + 0.5) * step,
                    lo.y + (j as f64 + 0.5) * step,
                );
                if point_in_rings(&rings, p) {
                    pts.push(p);
                }
            }
        }
    }
    pts
}

fn point_in_rings(rings: &[Vec<Point>], p: Point) -> bool {
    let mut inside = false;
    for ring in rings {
        let n = ring.len();
        for i in 0..n {
            let a = ring[i];
            let b = ring[(i + 1) % n];
            if (a.y > p.y) != (b.y > p.y) {
                let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if p.x < x_cross {
                    inside = !inside;
                }
            }
        }
    }
    inside
}

fn validate(set: &PlanarSet, params: &MCParams) -> Result<(), MCError> {
    let diameter = set.diameter();
    if diameter > DOMAIN_LIMIT {
        return Err(MCError::DomainTooLarge {
            diameter,
            limit: DOMAIN_LIMIT,
        });
    }
    if !(params.h > 0.0) || params.replicates == 0 {
        return Err(MCError::InvalidParameter(format!(
            "need h > 0 and replicates > 0, got h = {}, replicates = {}",
            params.h, params.replicates
        )));
    }
    Ok(())
}

/// Per-replicate grid maxima of the field over the discretized set.
/// Deterministic in (seed, replicates): the RNG stream is keyed by the
/// replicate index, and the reduction is index-ordered.
fn replicate_maxima(
    set: &PlanarSet,
    params: &MCParams,
) -> Result<Vec<f64>, MCError> {
    let points = sample_points(set, params.h);
    if points.is_empty() {
        return Err(MCError::InvalidParameter("set has no sample points".into()));
    }
    let cache = BasisCache::new(&points, params.k);
    (0..params.replicates)
        .into_par_iter()
        .map(|r| Ok(cache.max_value(&make_field(params.seed, r, params.k)?)))
        .collect()
}

/// Empirical exceedance probabilities of the discretized maximum at each
/// level in `u_list`.
pub fn estimate_exceedance(
    set: &PlanarSet,
    u_list: &[f64],
    params: &MCParams,
) -> Result<Vec<MCEstimate>, MCError> {
    validate(set, params)?;
    let maxima = replicate_maxima(set, params)?;
    let n = params.replicates as f64;
    let mut out = Vec::with_capacity(u_list.len());
    for &u in u_list {
        let count = maxima.iter().filter(|&&m| m >= u).count() as f64;
        let p_hat = count / n;
        let diagnostics = if params.diagnostics {
            diagnose_replicates(set, &maxima, u, params)?
        } else {
            Diagnostics::default()
        };
        out.push(MCEstimate {
            u,
            p_hat,
            replicates: params.replicates,
            standard_error: (p_hat * (1.0 - p_hat) / n).sqrt(),
            h: params.h,
            diagnostics,
        });
    }
    Ok(out)
}

/// Probability that every set's maximum exceeds `u` simultaneously (one
/// shared field realization per replicate).
pub fn estimate_joint_exceedance(
    sets: &[PlanarSet],
    u: f64,
    params: &MCParams,
) -> Result<MCEstimate, MCError> {
    if sets.is_empty() {
        return Err(MCError::InvalidParameter("no sets".into()));
    }
    for s in sets {
        validate(s, params)?;
    }
    let caches: Vec<BasisCache> = sets
        .iter()
        .map(|s| {
            let pts = sample_points(s, params.h);
            BasisCache::new(&pts, params.k)
        })
        .collect();
    let count: u64 = (0..params.replicates)
        .into_par_iter()
        .map(|r| {
            let field = make_field(params.seed, r, params.k).expect("validated K");
            u64::from(caches.iter().all(|c| c.max_value(&field) >= u))
        })
        .sum();
    let n = params.replicates as f64;
    let p_hat = count as f64 / n;
    Ok(MCEstimate {
        u,
        p_hat,
        replicates: params.replicates,
        standard_error: (p_hat * (1.0 - p_hat) / n).sqrt(),
        h: params.h,
        diagnostics: Diagnostics::default(),
    })
}

/// Excursion-set diagnostics of one field realization on a ball, following
/// the negligible-event list of the ball-sandwich argument.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct DiagnosticRecord {
    pub local_maxima_above_u: usize,
    pub a1: bool,
    pub a2: bool,
    pub a3: bool,
    pub a4: bool,
    /// Ball-sandwich radii (present when exactly one maximum exists and
    /// the level permits them).
    pub r_lower: Option<f64>,
    pub r_upper: Option<f64>,
    pub sandwich_checked: bool,
    pub sandwich_ok: bool,
}

/// Directions sampled for the A3/A4 second-derivative bounds (a sampled
/// surrogate for the continuum minimum/maximum).
const DIAG_DIRECTIONS: usize = 16;
const DIAG_RADII: usize = 4;

#[allow(clippy::too_many_arguments)]
pub fn excursion_diagnostics(
    field: &RandomWaveField,
    center: Point,
    radius: f64,
    u: f64,
    alpha: f64,
    beta: f64,
    h: f64,
) -> Result<DiagnosticRecord, MCError> {
    if !(alpha > 0.0 && alpha < 1.0) || !(beta > (1.0 - alpha) / 2.0 && beta < 1.0) {
        return Err(MCError::InvalidParameter(format!(
            "need 0 < alpha < 1 and (1-alpha)/2 < beta < 1, got alpha = {alpha}, beta = {beta}"
        )));
    }
    if !(radius > 0.0 && h > 0.0) {
        return Err(MCError::InvalidParameter(
            "need radius > 0 and h > 0".into(),
        ));
    }

    // Field values on a grid covering the ball; out-of-ball cells NaN.
    let n = (2.0 * radius / h).ceil() as usize + 1;
    let origin = Point::new(center.x - radius, center.y - radius);
    let at = |i: usize, j: usize| Point::new(origin.x + i as f64 * h, origin.y + j as f64 * h);
    let mut values = vec![f64::NAN; n * n];
    for j in 0..n {
        for i in 0..n {
            let p = at(i, j);
            if p.dist(center) <= radius {
                values[j * n + i] = field.value(p);
            }
        }
    }

    // Grid-level local maxima above u: 8-neighborhood comparison, boundary
    // cells compared within their available (in-ball) neighbors.
    let mut maxima: Vec<(usize, usize, f64)> = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let v = values[j * n + i];
            if !(v >= u) {
                continue;
            }
            let mut is_max = true;
            for dj in -1i64..=1 {
                for di in -1i64..=1 {
                    if di == 0 && dj == 0 {
                        continue;
                    }
                    let (ni, nj) = (i as i64 + di, j as i64 + dj);
                    if ni < 0 || nj < 0 || ni >= n as i64 || nj >= n as i64 {
                        continue;
                    }
                    let w = values[nj as usize * n + ni as usize];
                    if w.is_nan() {
                        continue;
                    }
                    if w > v {
                        is_max = false;
                    }
                }
            }
            if is_max {
                maxima.push((i, j, v));
            }
        }
    }

    let a1 = maxima.iter().any(|&(_, _, v)| v >= u + 1.0);
    let a2 = maxima.len() >= 2;

    // A3/A4: radial second-derivative bounds on B(t, u^{-beta}).
    let rb = u.abs().max(1e-9).powf(-beta);
    let ua = u.abs().max(1e-9).powf(alpha);
    let mut a3 = false;
    let mut a4 = false;
    for &(i, j, v) in &maxima {
        if !(v > u && v < u + 1.0) {
            continue;
        }
        let t = at(i, j);
        let mut qmin = f64::INFINITY;
        let mut qmax = f64::NEG_INFINITY;
        for d in 0..DIAG_DIRECTIONS {
            let a = std::f64::consts::TAU * d as f64 / DIAG_DIRECTIONS as f64;
            let dir = Point::new(a.cos(), a.sin());
            for r in 1..=DIAG_RADII {
                let s = t + dir * (rb * r as f64 / DIAG_RADII as f64);
                let (_, _, hess) = field.evaluate(s);
                let q = dir.x * dir.x * hess[0][0]
                    + 2.0 * dir.x * dir.y * hess[0][1]
                    + dir.y * dir.y * hess[1][1];
                qmin = qmin.min(q);
                qmax = qmax.max(q);
            }
        }
        a3 |= qmin <= -v - ua;
        a4 |= qmax >= -v + ua;
    }

    // Ball sandwich for a unique maximum.
    let mut r_lower = None;
    let mut r_upper = None;
    let mut sandwich_checked = false;
    let mut sandwich_ok = false;
    if maxima.len() == 1 && u > ua {
        let (i, j, v) = maxima[0];
        let t = at(i, j);
        let rl = (2.0 * (v - u) / (v + ua)).sqrt();
        let ru = (2.0 * (v - u) / (u - ua)).sqrt();
        r_lower = Some(rl);
        r_upper = Some(ru);
        sandwich_checked = true;
        sandwich_ok = true;
        for j2 in 0..n {
            for i2 in 0..n {
                let w = values[j2 * n + i2];
                if w.is_nan() {
                    continue;
                }
                let d = at(i2, j2).dist(t);
                // Inner ball inside the excursion; excursion inside the
                // outer ball.
                if d <= rl && w < u {
                    sandwich_ok = false;
                }
                if w >= u && d > ru {
                    sandwich_ok = false;
                }
            }
        }
    }

    Ok(DiagnosticRecord {
        local_maxima_above_u: maxima.len(),
        a1,
        a2,
        a3,
        a4,
        r_lower,
        r_upper,
        sandwich_checked,
        sandwich_ok,
    })
}

/// Default exponents for the diagnostic events.
pub const DIAG_ALPHA: f64 = 0.4;
pub const DIAG_BETA: f64 = 0.4;

fn diagnose_replicates(
    set: &PlanarSet,
    maxima: &[f64],
    u: f64,
    params: &MCParams,
) -> Result<Diagnostics, MCError> {
    let (lo, hi) = set.bounding_box();
    let center = Point::new(0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y));
    let radius = 0.5 * hi.dist(lo) + 0.5;
    let mut d = Diagnostics::default();
    for (r, &m) in maxima.iter().enumerate() {
        if m < u {
            continue;
        }
        if d.diagnosed >= params.diagnostics_cap {
            break;
        }
        let field = make_field(params.seed, r as u64, params.k)?;
        let rec = excursion_diagnostics(
            &field,
            center,
            radius,
            u,
            DIAG_ALPHA,
            DIAG_BETA,
            (params.h * 4.0).max(0.02),
        )?;
        d.diagnosed += 1;
        d.a1 += u64::from(rec.a1);
        d.a2 += u64::from(rec.a2);
        d.a3 += u64::from(rec.a3);
        d.a4 += u64::from(rec.a4);
        d.sandwich_checked += u64::from(rec.sandwich_checked);
        d.sandwich_failed += u64::from(rec.sandwich_checked && !rec.sandwich_ok);
    }
    Ok(d)
}
