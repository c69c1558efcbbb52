//! Programmatic constructors for the standard test geometries.

use std::f64::consts::PI;

use crate::geometry2d::{Edge, PlanarSet, RawComponent};
use crate::point::Point;

fn seg(from: (f64, f64), to: (f64, f64)) -> Edge {
    Edge::Segment {
        from: Point::new(from.0, from.1),
        to: Point::new(to.0, to.1),
    }
}

fn polygon_edges(pts: &[(f64, f64)]) -> Vec<Edge> {
    (0..pts.len())
        .map(|i| seg(pts[i], pts[(i + 1) % pts.len()]))
        .collect()
}

fn region(outer: Vec<Edge>) -> PlanarSet {
    PlanarSet::build(vec![RawComponent::Region {
        outer,
        holes: vec![],
        whiskers: vec![],
    }])
    .expect("fixture is valid")
}

/// Unit square [0,1]^2.
pub fn unit_square() -> PlanarSet {
    region(polygon_edges(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]))
}

/// Disk of radius `r` centered at the origin, built from two half-circle arcs.
pub fn disk(r: f64) -> PlanarSet {
    let arc = |a0: f64, a1: f64| Edge::Arc {
        center: Point::new(0.0, 0.0),
        radius: r,
        from_angle: a0,
        to_angle: a1,
        ccw: true,
    };
    region(vec![arc(0.0, PI), arc(PI, 0.0)])
}

/// Boundary of the unit square as a pure curve (the "empty square").
pub fn empty_square() -> PlanarSet {
    PlanarSet::build(vec![RawComponent::Curve(polygon_edges(&[
        (0.0, 0.0),
        (1.0, 0.0),
        (1.0, 1.0),
        (0.0, 1.0),
    ]))])
    .expect("fixture is valid")
}

/// Unit square with two opposite perpendicular whiskers of length `len`.
pub fn whiskered_square(len: f64) -> PlanarSet {
    PlanarSet::build(vec![RawComponent::Region {
        outer: polygon_edges(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]),
        holes: vec![],
        whiskers: vec![
            vec![seg((1.0, 0.5), (1.0 + len, 0.5))],
            vec![seg((0.0, 0.5), (-len, 0.5))],
        ],
    }])
    .expect("fixture is valid")
}

/// Two segments of length `arm` meeting at the origin with tangent
/// discontinuity `beta` (the "angle").
pub fn angle(beta: f64, arm: f64) -> PlanarSet {
    let psi = PI - beta;
    PlanarSet::build(vec![RawComponent::Curve(vec![
        seg((arm * psi.cos(), arm * psi.sin()), (0.0, 0.0)),
        seg((0.0, 0.0), (arm, 0.0)),
    ])])
    .expect("fixture is valid")
}

/// Self-avoiding chain of `betas.len() + 1` unit segments with the given
/// tangent discontinuities (the "multi-angle"). Turn signs alternate to keep
/// the chain self-avoiding.
pub fn multi_angle(betas: &[f64], arm: f64) -> PlanarSet {
    let mut pts = vec![(0.0, 0.0)];
    let mut dir: f64 = 0.0;
    let mut cur = Point::new(0.0, 0.0);
    for (i, &b) in std::iter::once(&0.0).chain(betas.iter()).enumerate() {
        let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
        dir += sign * b;
        cur = cur + Point::new(dir.cos(), dir.sin()) * arm;
        pts.push((cur.x, cur.y));
    }
    let edges = pts.windows(2).map(|w| seg(w[0], w[1])).collect();
    PlanarSet::build(vec![RawComponent::Curve(edges)]).expect("fixture is valid")
}

/// L-shaped hexagon with one concave vertex (beta = pi/2) at (1,1).
pub fn l_hexagon() -> PlanarSet {
    region(polygon_edges(&[
        (0.0, 0.0),
        (2.0, 0.0),
        (2.0, 1.0),
        (1.0, 1.0),
        (1.0, 2.0),
        (0.0, 2.0),
    ]))
}

/// Non-convex pentagon with a single concave vertex of beta = pi/2.
pub fn pentagon_concave() -> PlanarSet {
    region(polygon_edges(&[
        (0.0, 0.0),
        (4.0, 0.0),
        (4.0, 3.0),
        (2.0, 1.0),
        (0.0, 3.0),
    ]))
}

/// Square of side `side` with a centered square hole of side `hole`.
pub fn square_with_hole(side: f64, hole: f64) -> PlanarSet {
    let c = (side - hole) / 2.0;
    PlanarSet::build(vec![RawComponent::Region {
        outer: polygon_edges(&[(0.0, 0.0), (side, 0.0), (side, side), (0.0, side)]),
        holes: vec![polygon_edges(&[
            (c, c),
            (c + hole, c),
            (c + hole, c + hole),
            (c, c + hole),
        ])],
        whiskers: vec![],
    }])
    .expect("fixture is valid")
}

/// A single segment as a pure curve.
pub fn segment_curve(from: (f64, f64), to: (f64, f64)) -> PlanarSet {
    PlanarSet::build(vec![RawComponent::Curve(vec![seg(from, to)])]).expect("fixture is valid")
}

/// A circular arc of radius `r` centered at `center`, as a pure curve.
pub fn arc_curve(center: (f64, f64), r: f64, a0: f64, a1: f64) -> PlanarSet {
    PlanarSet::build(vec![RawComponent::Curve(vec![Edge::Arc {
        center: Point::new(center.0, center.1),
        radius: r,
        from_angle: a0,
        to_angle: a1,
        ccw: true,
    }])])
    .expect("fixture is valid")
}

/// Degenerate single-point set: sigma2 = 0, L1 = 0, L0 = 1.
pub fn point(x: f64, y: f64) -> PlanarSet {
    PlanarSet::build(vec![RawComponent::Point(Point::new(x, y))]).unwrap()
}
