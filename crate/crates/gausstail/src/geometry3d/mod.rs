//! Steiner-type coefficients (L1, L2, L3) for 3D polytopes and unions of
//! axis-aligned boxes, with convex/concave edge bookkeeping.

use std::f64::consts::PI;

use thiserror::Error;

use crate::geometry2d::Provenance;

pub mod json;
#[cfg(test)]
mod tests;

#[derive(Debug, Error)]
pub enum Geometry3dError {
    #[error("invalid polytope summary: {0}")]
    InvalidSummary(String),
    #[error("dihedral angle {0} outside the open interval (0, 2*pi)")]
    DihedralOutOfRange(f64),
    #[error("angle {0} outside the open interval (0, pi)")]
    AngleOutOfRange(f64),
    #[error("invalid box: {0}")]
    InvalidBox(String),
    #[error("boxes have overlapping interiors")]
    OverlappingBoxes,
    #[error("boxes touch along an edge or vertex without sharing a face")]
    NonFaceContact,
    #[error("geometry JSON: {0}")]
    Json(String),
}

/// One straight edge of a polytope: its length and the internal dihedral
/// angle between the two incident faces, measured through the solid.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EdgeSummary {
    pub length: f64,
    pub internal_dihedral: f64,
}

impl EdgeSummary {
    pub fn is_concave(&self) -> bool {
        self.internal_dihedral > PI
    }
}

/// Combinatorial summary of a polytope: enough to evaluate the Steiner-type
/// coefficients without holding the full face lattice.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PolytopeSummary {
    pub volume: f64,
    pub surface_area: f64,
    pub edges: Vec<EdgeSummary>,
}

impl PolytopeSummary {
    pub fn validate(&self) -> Result<(), Geometry3dError> {
        if !(self.volume >= 0.0) {
            return Err(Geometry3dError::InvalidSummary(format!(
                "volume {} must be >= 0",
                self.volume
            )));
        }
        if !(self.surface_area >= 0.0) {
            return Err(Geometry3dError::InvalidSummary(format!(
                "surface area {} must be >= 0",
                self.surface_area
            )));
        }
        for e in &self.edges {
            if !(e.length > 0.0) {
                return Err(Geometry3dError::InvalidSummary(format!(
                    "edge length {} must be > 0",
                    e.length
                )));
            }
            if !(e.internal_dihedral > 0.0 && e.internal_dihedral < 2.0 * PI) {
                return Err(Geometry3dError::DihedralOutOfRange(e.internal_dihedral));
            }
        }
        Ok(())
    }

    /// Total edge length split into (convex, concave).
    pub fn edge_lengths(&self) -> (f64, f64) {
        let mut convex = 0.0;
        let mut concave = 0.0;
        for e in &self.edges {
            if e.is_concave() {
                concave += e.length;
            } else {
                convex += e.length;
            }
        }
        (convex, concave)
    }
}

/// Tube-volume coefficients of `vol(S^{+eps}) = L3 + 2*L2*eps + pi*L1*eps^2
/// + o(eps^2)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SteinerCoeffs3D {
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
    pub provenance: Provenance,
}

/// Convex edges with internal dihedral a contribute (pi - a) l / (2 pi);
/// concave edges (internal dihedral g > pi) contribute cot(g/2) l / pi, a
/// negative quantity: the face slabs of the tube overlap near a reflex edge
/// and the overlap deficit per unit length is -cot(g/2) eps^2. (Writing the
/// tangent discontinuity b = g - pi, this is the 2D corner deficit
/// -tan(b/2) eps^2 again, since cot(g/2) = -tan((g - pi)/2).)
pub fn polytope_coefficients(p: &PolytopeSummary) -> Result<SteinerCoeffs3D, Geometry3dError> {
    p.validate()?;
    let mut l1 = 0.0;
    for e in &p.edges {
        let g = e.internal_dihedral;
        if e.is_concave() {
            l1 += (g / 2.0).tan().recip() * e.length / PI;
        } else {
            l1 += (PI - g) * e.length / (2.0 * PI);
        }
    }
    Ok(SteinerCoeffs3D {
        l1,
        l2: p.surface_area / 2.0,
        l3: p.volume,
        provenance: Provenance::Exact,
    })
}

/// Per-unit-edge-length constant subtracted in the dihedral expansion:
/// ((pi + a)/2 + cot(a/2)) / pi for a in (0, pi).
pub fn dihedral_subtraction_constant(alpha: f64) -> Result<f64, Geometry3dError> {
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Geometry3dError::AngleOutOfRange(alpha));
    }
    Ok(((PI + alpha) / 2.0 + (alpha / 2.0).tan().recip()) / PI)
}

/// Axis-aligned box, min corner strictly below max corner on every axis.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Box3 {
    pub min: [f64; 3],
    pub max: [f64; 3],
}

impl Box3 {
    pub fn validate(&self) -> Result<(), Geometry3dError> {
        for a in 0..3 {
            if !self.min[a].is_finite() || !self.max[a].is_finite() {
                return Err(Geometry3dError::InvalidBox("non-finite corner".into()));
            }
            if !(self.min[a] < self.max[a]) {
                return Err(Geometry3dError::InvalidBox(format!(
                    "min[{a}] = {} not below max[{a}] = {}",
                    self.min[a], self.max[a]
                )));
            }
        }
        Ok(())
    }

    pub fn contains(&self, p: [f64; 3]) -> bool {
        (0..3).all(|a| p[a] >= self.min[a] && p[a] <= self.max[a])
    }

    /// Euclidean distance from a point to the (solid) box.
    pub fn distance(&self, p: [f64; 3]) -> f64 {
        let mut d2 = 0.0;
        for a in 0..3 {
            let d = (self.min[a] - p[a]).max(p[a] - self.max[a]).max(0.0);
            d2 += d * d;
        }
        d2.sqrt()
    }
}

/// Coordinate-compressed cell grid over a set of boxes. Every box corner
/// plane becomes a grid plane, so each cell is entirely inside or outside
/// each box and the union is resolved exactly.
struct CellGrid {
    // Sorted, deduplicated coordinates per axis.
    coords: [Vec<f64>; 3],
    // Occupancy of each cell, indexed (i, j, k) -> i + nx*(j + ny*k).
    occupied: Vec<bool>,
}

const COORD_TOL: f64 = 1e-12;

fn compress(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v.dedup_by(|a, b| (*a - *b).abs() <= COORD_TOL);
    v
}

impl CellGrid {
    fn build(boxes: &[Box3]) -> Result<CellGrid, Geometry3dError> {
        let coords = [0, 1, 2].map(|a| {
            compress(
                boxes
                    .iter()
                    .flat_map(|b| [b.min[a], b.max[a]])
                    .collect::<Vec<f64>>(),
            )
        });
        let n: [usize; 3] = [0, 1, 2].map(|a| coords[a].len() - 1);
        let mut occupied = vec![false; n[0] * n[1] * n[2]];
        for k in 0..n[2] {
            for j in 0..n[1] {
                for i in 0..n[0] {
                    let center = [
                        0.5 * (coords[0][i] + coords[0][i + 1]),
                        0.5 * (coords[1][j] + coords[1][j + 1]),
                        0.5 * (coords[2][k] + coords[2][k + 1]),
                    ];
                    let claims = boxes.iter().filter(|b| b.contains(center)).count();
                    if claims > 1 {
                        return Err(Geometry3dError::OverlappingBoxes);
                    }
                    occupied[i + n[0] * (j + n[1] * k)] = claims == 1;
                }
            }
        }
        Ok(CellGrid { coords, occupied })
    }

    fn dims(&self) -> [usize; 3] {
        [0, 1, 2].map(|a| self.coords[a].len() - 1)
    }

    /// Occupancy with out-of-range indices treated as empty.
    fn occ(&self, i: isize, j: isize, k: isize) -> bool {
        let n = self.dims();
        if i < 0 || j < 0 || k < 0 {
            return false;
        }
        let (i, j, k) = (i as usize, j as usize, k as usize);
        if i >= n[0] || j >= n[1] || k >= n[2] {
            return false;
        }
        self.occupied[i + n[0] * (j + n[1] * k)]
    }

    fn extent(&self, axis: usize, idx: usize) -> f64 {
        self.coords[axis][idx + 1] - self.coords[axis][idx]
    }
}

/// Within each 2x2x2 block of cells around an interior grid vertex, the
/// occupied cells must be face-connected; otherwise two boxes touch only
/// along an edge or at a vertex and the union is not a manifold polytope.
fn check_manifold(grid: &CellGrid) -> Result<(), Geometry3dError> {
    let n = grid.dims();
    for k in 0..=n[2] {
        for j in 0..=n[1] {
            for i in 0..=n[0] {
                let mut cells = Vec::with_capacity(8);
                for dz in 0..2_isize {
                    for dy in 0..2_isize {
                        for dx in 0..2_isize {
                            if grid.occ(i as isize - 1 + dx, j as isize - 1 + dy, k as isize - 1 + dz)
                            {
                                cells.push((dx, dy, dz));
                            }
                        }
                    }
                }
                if cells.len() < 2 {
                    continue;
                }
                // Flood fill over face adjacency inside the block.
                let mut reached = vec![false; cells.len()];
                reached[0] = true;
                let mut frontier = vec![0];
                while let Some(c) = frontier.pop() {
                    for (idx, other) in cells.iter().enumerate() {
                        if !reached[idx] {
                            let d = (cells[c].0 - other.0).abs()
                                + (cells[c].1 - other.1).abs()
                                + (cells[c].2 - other.2).abs();
                            if d == 1 {
                                reached[idx] = true;
                                frontier.push(idx);
                            }
                        }
                    }
                }
                if reached.iter().any(|r| !r) {
                    return Err(Geometry3dError::NonFaceContact);
                }
            }
        }
    }
    Ok(())
}

/// Exact polytope summary of a union of axis-aligned boxes with pairwise
/// disjoint interiors. All dihedral angles are pi/2 (convex) or 3*pi/2
/// (concave).
pub fn box_union(boxes: &[Box3]) -> Result<PolytopeSummary, Geometry3dError> {
    if boxes.is_empty() {
        return Err(Geometry3dError::InvalidBox("empty box list".into()));
    }
    for b in boxes {
        b.validate()?;
    }
    let grid = CellGrid::build(boxes)?;
    check_manifold(&grid)?;
    let n = grid.dims();

    let mut volume = 0.0;
    for k in 0..n[2] {
        for j in 0..n[1] {
            for i in 0..n[0] {
                if grid.occ(i as isize, j as isize, k as isize) {
                    volume += grid.extent(0, i) * grid.extent(1, j) * grid.extent(2, k);
                }
            }
        }
    }

    // A grid face belongs to the boundary iff exactly one of its two
    // adjacent cells is occupied.
    let mut surface_area = 0.0;
    for axis in 0..3 {
        let (u, v) = ((axis + 1) % 3, (axis + 2) % 3);
        for p in 0..=n[axis] {
            for q in 0..n[u] {
                for r in 0..n[v] {
                    let mut lo = [0_isize; 3];
                    lo[axis] = p as isize - 1;
                    lo[u] = q as isize;
                    lo[v] = r as isize;
                    let mut hi = lo;
                    hi[axis] = p as isize;
                    let a = grid.occ(lo[0], lo[1], lo[2]);
                    let b = grid.occ(hi[0], hi[1], hi[2]);
                    if a != b {
                        surface_area += grid.extent(u, q) * grid.extent(v, r);
                    }
                }
            }
        }
    }

    // A grid edge segment is a polytope edge iff the four cells around it
    // show 1 occupied (convex) or 3 occupied (concave). Two face-adjacent
    // occupied cells are a flat continuation; the diagonal two-cell pattern
    // was already rejected by the manifold check.
    let mut convex_len = 0.0;
    let mut concave_len = 0.0;
    for axis in 0..3 {
        let (u, v) = ((axis + 1) % 3, (axis + 2) % 3);
        for p in 0..n[axis] {
            for q in 0..=n[u] {
                for r in 0..=n[v] {
                    let mut count = 0;
                    for (du, dv) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                        let mut c = [0_isize; 3];
                        c[axis] = p as isize;
                        c[u] = q as isize - 1 + du;
                        c[v] = r as isize - 1 + dv;
                        if grid.occ(c[0], c[1], c[2]) {
                            count += 1;
                        }
                    }
                    match count {
                        1 => convex_len += grid.extent(axis, p),
                        3 => concave_len += grid.extent(axis, p),
                        _ => {}
                    }
                }
            }
        }
    }

    let mut edges = Vec::new();
    if convex_len > 0.0 {
        edges.push(EdgeSummary {
            length: convex_len,
            internal_dihedral: PI / 2.0,
        });
    }
    if concave_len > 0.0 {
        edges.push(EdgeSummary {
            length: concave_len,
            internal_dihedral: 3.0 * PI / 2.0,
        });
    }
    Ok(PolytopeSummary {
        volume,
        surface_area,
        edges,
    })
}
