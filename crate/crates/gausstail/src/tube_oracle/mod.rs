//! Brute-force grid oracle: exact per-cell distance fields, tube volumes by
//! cell counting, and least-squares extraction of Steiner coefficients.

use std::f64::consts::PI;

use rayon::prelude::*;
use thiserror::Error;

use crate::geometry2d::{PlanarSet, Provenance, SteinerCoeffs2D};
use crate::geometry3d::Box3;
use crate::point::Point;

#[cfg(test)]
mod tests;

#[derive(Debug, Error)]
pub enum TubeError {
    #[error("grid of {cells} cells exceeds the memory cap of {cap} cells")]
    GridTooLarge { cells: usize, cap: usize },
    #[error("epsilon {eps} exceeds the field margin {margin}")]
    EpsilonExceedsMargin { eps: f64, margin: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("fields are not on a shared grid")]
    MismatchedGrids,
    #[error("ill-conditioned fit: epsilon range [{min}, {max}] spans less than a factor of 4")]
    IllConditioned { min: f64, max: f64 },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Default memory cap, in cells (~1.6 GB of f32).
pub const DEFAULT_CELL_CAP: usize = 400_000_000;

/// Regular grid of distances to a set, sampled at cell centers. Dimension
/// is `dims.len()` (2 or 3).
#[derive(Debug, Clone)]
pub struct GridField {
    pub origin: Vec<f64>,
    pub h: f64,
    pub dims: Vec<usize>,
    /// Largest epsilon the field can answer for: distance values are exact,
    /// but cells further than this from the set may lie outside the grid.
    pub margin: f64,
    pub values: Vec<f32>,
}

impl GridField {
    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    pub fn cell_count(&self) -> usize {
        self.dims.iter().product()
    }

    fn cell_volume(&self) -> f64 {
        self.h.powi(self.dims.len() as i32)
    }

    fn same_grid(&self, other: &GridField) -> bool {
        self.dims == other.dims
            && self.h == other.h
            && self
                .origin
                .iter()
                .zip(&other.origin)
                .all(|(a, b)| (a - b).abs() <= 1e-12)
    }

    /// Binary dump: flat little-endian f32 values plus a JSON sidecar
    /// `{origin, h, dims}` at `path.json`.
    pub fn dump(&self, path: &std::path::Path) -> Result<(), TubeError> {
        use std::io::Write;
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        for v in &self.values {
            f.write_all(&v.to_le_bytes())?;
        }
        f.flush()?;
        let sidecar = serde_json::json!({
            "origin": self.origin,
            "h": self.h,
            "dims": self.dims,
        });
        let mut side = path.as_os_str().to_owned();
        side.push(".json");
        std::fs::write(side, sidecar.to_string())?;
        Ok(())
    }
}

fn check_cap(cells: usize, cap: usize) -> Result<(), TubeError> {
    if cells > cap {
        return Err(TubeError::GridTooLarge { cells, cap });
    }
    Ok(())
}

/// Even-odd point-in-polygon test against flattened rings.
fn inside_rings(rings: &[Vec<Point>], p: Point) -> bool {
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

/// Distance field to a planar set over its bounding box inflated by
/// `margin`. Distances are exact per-primitive minima (zero inside region
/// interiors); no propagation error.
pub fn distance_field_2d(
    set: &PlanarSet,
    margin: f64,
    h: f64,
    cap: usize,
) -> Result<GridField, TubeError> {
    let (lo, hi) = set.bounding_box();
    distance_field_2d_bbox(
        set,
        [lo.x - margin, lo.y - margin],
        [hi.x + margin, hi.y + margin],
        margin,
        h,
        cap,
    )
}

/// Distance field over an explicit window; `margin` only records the
/// largest trustworthy epsilon.
pub fn distance_field_2d_bbox(
    set: &PlanarSet,
    lo: [f64; 2],
    hi: [f64; 2],
    margin: f64,
    h: f64,
    cap: usize,
) -> Result<GridField, TubeError> {
    if !(h > 0.0) || !(margin > 0.0) {
        return Err(TubeError::InvalidParameter(format!(
            "need h > 0 and margin > 0, got h = {h}, margin = {margin}"
        )));
    }
    // Deterministic sub-cell shift so axis-aligned geometry is never
    // commensurate with the cell-center lattice (commensurate alignment
    // turns the counting error into a systematic bias).
    let lo = [lo[0] - h / PI, lo[1] - h / PI];
    let nx = ((hi[0] - lo[0]) / h).ceil().max(1.0) as usize;
    let ny = ((hi[1] - lo[1]) / h).ceil().max(1.0) as usize;
    check_cap(nx.saturating_mul(ny), cap)?;

    let edges: Vec<_> = set.all_edges().cloned().collect();
    let points: Vec<Point> = set
        .components
        .iter()
        .filter_map(|c| match c {
            crate::geometry2d::Component::Point(p) => Some(*p),
            _ => None,
        })
        .collect();
    // Flatten rings finely enough that the inside test cannot misclassify
    // a cell center by more than a small fraction of h.
    let rings = set.region_rings(h * 0.05);

    let values: Vec<f32> = (0..ny)
        .into_par_iter()
        .flat_map_iter(|j| {
            let edges = &edges;
            let points = &points;
            let rings = &rings;
            (0..nx).map(move |i| {
                let p = Point::new(
                    lo[0] + (i as f64 + 0.5) * h,
                    lo[1] + (j as f64 + 0.5) * h,
                );
                if inside_rings(rings, p) {
                    return 0.0f32;
                }
                let mut d = f64::INFINITY;
                for e in edges {
                    d = d.min(e.distance(p));
                }
                for q in points {
                    d = d.min(q.dist(p));
                }
                d as f32
            })
        })
        .collect();

    Ok(GridField {
        origin: vec![lo[0], lo[1]],
        h,
        dims: vec![nx, ny],
        margin,
        values,
    })
}

/// Distance field to a union of boxes (solid: zero inside).
pub fn distance_field_3d(
    boxes: &[Box3],
    margin: f64,
    h: f64,
    cap: usize,
) -> Result<GridField, TubeError> {
    if !(h > 0.0) || !(margin > 0.0) {
        return Err(TubeError::InvalidParameter(format!(
            "need h > 0 and margin > 0, got h = {h}, margin = {margin}"
        )));
    }
    if boxes.is_empty() {
        return Err(TubeError::InvalidParameter("empty box list".into()));
    }
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for b in boxes {
        for a in 0..3 {
            lo[a] = lo[a].min(b.min[a] - margin);
            hi[a] = hi[a].max(b.max[a] + margin);
        }
    }
    // Same sub-cell decommensuration shift as in 2D.
    for l in &mut lo {
        *l -= h / PI;
    }
    let n: Vec<usize> = (0..3)
        .map(|a| ((hi[a] - lo[a]) / h).ceil().max(1.0) as usize)
        .collect();
    check_cap(n[0].saturating_mul(n[1]).saturating_mul(n[2]), cap)?;

    let values: Vec<f32> = (0..n[2])
        .into_par_iter()
        .flat_map_iter(|k| {
            let n0 = n[0];
            let n1 = n[1];
            (0..n1).flat_map(move |j| {
                (0..n0).map(move |i| {
                    let p = [
                        lo[0] + (i as f64 + 0.5) * h,
                        lo[1] + (j as f64 + 0.5) * h,
                        lo[2] + (k as f64 + 0.5) * h,
                    ];
                    boxes
                        .iter()
                        .map(|b| b.distance(p))
                        .fold(f64::INFINITY, f64::min) as f32
                })
            })
        })
        .collect();

    Ok(GridField {
        origin: lo.to_vec(),
        h,
        dims: n,
        margin,
        values,
    })
}

/// Measure of the tube `{dist <= eps}` by cell-center counting.
pub fn tube_volume(field: &GridField, eps: f64) -> Result<f64, TubeError> {
    if eps > field.margin {
        return Err(TubeError::EpsilonExceedsMargin {
            eps,
            margin: field.margin,
        });
    }
    let e = eps as f32;
    let count: usize = field
        .values
        .par_iter()
        .map(|&v| usize::from(v <= e))
        .sum();
    Ok(count as f64 * field.cell_volume())
}

/// Measure of cells within `eps` of every field (shared grid).
pub fn intersection_tube_volume(fields: &[GridField], eps: f64) -> Result<f64, TubeError> {
    let first = fields
        .first()
        .ok_or_else(|| TubeError::InvalidParameter("no fields".into()))?;
    for f in fields {
        if !first.same_grid(f) {
            return Err(TubeError::MismatchedGrids);
        }
        if eps > f.margin {
            return Err(TubeError::EpsilonExceedsMargin {
                eps,
                margin: f.margin,
            });
        }
    }
    let e = eps as f32;
    let count: usize = (0..first.values.len())
        .into_par_iter()
        .map(|i| usize::from(fields.iter().all(|f| f.values[i] <= e)))
        .sum();
    Ok(count as f64 * first.cell_volume())
}

/// Polynomial least-squares fit of the tube volume over an epsilon grid.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SteinerFit {
    /// Polynomial coefficients by increasing power of eps; degree equals
    /// the grid dimension.
    pub coefficients: Vec<f64>,
    /// Root-mean-square residual of the weighted fit.
    pub residual: f64,
    pub eps_grid: Vec<f64>,
}

impl SteinerFit {
    /// Interpret a 2D fit as `(sigma2, L1, L0)`.
    pub fn to_coeffs_2d(&self) -> SteinerCoeffs2D {
        SteinerCoeffs2D {
            sigma2: self.coefficients[0],
            l1: self.coefficients[1],
            l0: self.coefficients[2] / PI,
            provenance: Provenance::Fitted,
        }
    }

    /// Interpret a 3D fit as `(L3, L2, L1)` from
    /// `vol = L3 + 2 L2 eps + pi L1 eps^2 + ...`.
    pub fn to_coeffs_3d(&self) -> (f64, f64, f64) {
        (
            self.coefficients[0],
            self.coefficients[1] / 2.0,
            self.coefficients[2] / PI,
        )
    }
}

/// Solve the small dense normal equations by Gaussian elimination with
/// partial pivoting.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in (col + 1)..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let s: f64 = ((col + 1)..n).map(|k| a[col][k] * x[k]).sum();
        x[col] = (b[col] - s) / a[col][col];
    }
    x
}

/// Weighted (1/eps) polynomial fit of `tube_volume(eps)` of degree equal to
/// the field dimension. When the exact constant term (area or volume) is
/// known, pin it with `pinned_constant` and fit only the remaining powers.
pub fn fit_steiner(
    field: &GridField,
    eps_grid: &[f64],
    pinned_constant: Option<f64>,
) -> Result<SteinerFit, TubeError> {
    let degree = field.dimension();
    if eps_grid.len() < 8 {
        return Err(TubeError::InvalidParameter(format!(
            "need at least 8 epsilon values, got {}",
            eps_grid.len()
        )));
    }
    let min = eps_grid.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = eps_grid.iter().cloned().fold(0.0, f64::max);
    if !(min > 0.0) {
        return Err(TubeError::InvalidParameter("epsilon must be > 0".into()));
    }
    if max / min < 4.0 {
        return Err(TubeError::IllConditioned { min, max });
    }

    let volumes: Result<Vec<f64>, TubeError> =
        eps_grid.iter().map(|&e| tube_volume(field, e)).collect();
    let volumes = volumes?;

    // Powers being fitted: 0..=degree, minus the pinned constant.
    let powers: Vec<i32> = if pinned_constant.is_some() {
        (1..=degree as i32).collect()
    } else {
        (0..=degree as i32).collect()
    };
    let m = powers.len();
    let mut ata = vec![vec![0.0; m]; m];
    let mut atb = vec![0.0; m];
    for (&e, &v) in eps_grid.iter().zip(&volumes) {
        let w = 1.0 / e;
        let y = v - pinned_constant.unwrap_or(0.0);
        let row: Vec<f64> = powers.iter().map(|&p| e.powi(p)).collect();
        for i in 0..m {
            for j in 0..m {
                ata[i][j] += w * w * row[i] * row[j];
            }
            atb[i] += w * w * row[i] * y;
        }
    }
    let sol = solve(ata, atb);

    let mut coefficients = vec![0.0; degree + 1];
    if let Some(c0) = pinned_constant {
        coefficients[0] = c0;
    }
    for (idx, &p) in powers.iter().enumerate() {
        coefficients[p as usize] = sol[idx];
    }

    let mut ss = 0.0;
    for (&e, &v) in eps_grid.iter().zip(&volumes) {
        let pred: f64 = coefficients
            .iter()
            .enumerate()
            .map(|(p, c)| c * e.powi(p as i32))
            .sum();
        ss += (v - pred) * (v - pred);
    }
    Ok(SteinerFit {
        coefficients,
        residual: (ss / eps_grid.len() as f64).sqrt(),
        eps_grid: eps_grid.to_vec(),
    })
}

/// Default oracle resolution for a 2D set: `h = 2e-3 * diameter`, epsilon
/// grid geometric from 20h to 200h.
pub fn default_grid_2d(set: &PlanarSet) -> (f64, Vec<f64>) {
    let h = 2e-3 * set.diameter();
    (h, geometric_grid(20.0 * h, 200.0 * h, 12))
}

/// Default oracle resolution for a 3D box union of the given diameter:
/// `h = 4e-3 * diameter`, epsilon grid geometric from 10h to 150h. The wide
/// range keeps the quadratic and cubic powers well separated in the fit,
/// and the dense grid averages out cell-counting noise.
pub fn default_grid_3d(diameter: f64) -> (f64, Vec<f64>) {
    let h = 4e-3 * diameter;
    (h, geometric_grid(10.0 * h, 150.0 * h, 48))
}

pub fn geometric_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
        .collect()
}

/// Result of fitting `volume ~= C * eps^{n-d}`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IntersectionConstant {
    pub c: f64,
    /// Log-log slope of `volume / eps^{n-d}` against eps; near zero for a
    /// pure power law.
    pub trend_slope: f64,
    /// Raised when the data deviate systematically from the forced
    /// exponent (mixed orders, as for the tangent pair).
    pub mixed_order_warning: bool,
}

const TREND_TOLERANCE: f64 = 0.15;

/// Estimate C in `volume = (C + o(1)) eps^{n-d}` from measured volumes,
/// with a trend diagnostic against the forced exponent.
pub fn estimate_intersection_constant(
    samples: &[(f64, f64)],
    n: f64,
    d: f64,
) -> Result<IntersectionConstant, TubeError> {
    if samples.len() < 3 {
        return Err(TubeError::InvalidParameter(
            "need at least 3 (eps, volume) samples".into(),
        ));
    }
    if !(d < n) {
        return Err(TubeError::InvalidParameter(format!(
            "need d < n, got d = {d}, n = {n}"
        )));
    }
    let exponent = n - d;
    let ratios: Vec<(f64, f64)> = samples
        .iter()
        .map(|&(e, v)| (e, v / e.powf(exponent)))
        .collect();
    let c = ratios.iter().map(|&(_, r)| r).sum::<f64>() / ratios.len() as f64;

    // Least-squares slope of log(ratio) vs log(eps).
    let logs: Vec<(f64, f64)> = ratios
        .iter()
        .filter(|&&(_, r)| r > 0.0)
        .map(|&(e, r)| (e.ln(), r.ln()))
        .collect();
    if logs.len() < 3 {
        return Err(TubeError::InvalidParameter(
            "volumes vanish on most of the epsilon grid".into(),
        ));
    }
    let mx = logs.iter().map(|&(x, _)| x).sum::<f64>() / logs.len() as f64;
    let my = logs.iter().map(|&(_, y)| y).sum::<f64>() / logs.len() as f64;
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let trend_slope = sxy / sxx;

    Ok(IntersectionConstant {
        c,
        trend_slope,
        mixed_order_warning: trend_slope.abs() > TREND_TOLERANCE,
    })
}
