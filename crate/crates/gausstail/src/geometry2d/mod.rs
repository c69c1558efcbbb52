//! Planar sets with piecewise-C2 boundary and their exact tube (Steiner)
//! coefficients.
//!
//! A set consists of region components (outer boundary loop, hole loops,
//! attached whiskers) and pure-curve components. Vertices where two edges
//! meet non-smoothly are classified as convex-binary, concave-binary, angle
//! or concave-ternary points; the concave angles feed the L0 correction
//! `sum_i (beta_i/2 - tan(beta_i/2)) / pi`.

mod edge;
pub mod json;

pub use edge::Edge;

use std::f64::consts::{PI, TAU};

use thiserror::Error;

use crate::point::{Point, COINCIDENCE_TOL};

/// Angular tolerance below which a tangent discontinuity counts as smooth.
const ANGLE_TOL: f64 = 1e-9;
/// Tolerance for the per-loop turning identity.
const TURNING_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("edge chain is broken: gap of {gap} at ({x}, {y})")]
    BrokenChain { gap: f64, x: f64, y: f64 },
    #[error("loop is not closed")]
    NotClosed,
    #[error("self-intersecting loop or chain")]
    SelfIntersecting,
    #[error("excluded configuration: {0}")]
    ExcludedConfiguration(String),
    #[error("whisker not attached to the closure of the interior")]
    WhiskerNotAttached,
    #[error("turning identity violated: loop turning {got} differs from {expected}")]
    TurningIdentity { got: f64, expected: f64 },
    #[error("geometry JSON: {0}")]
    Json(String),
}

/// Classification of a non-smooth boundary vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IrregularKind {
    ConvexBinary,
    ConcaveBinary { beta: f64 },
    Angle { beta: f64 },
    ConcaveTernary { beta1: f64, beta2: f64 },
}

#[derive(Debug, Clone, Copy)]
pub struct IrregularPoint {
    pub location: Point,
    pub kind: IrregularKind,
}

impl IrregularPoint {
    /// Concave angles contributed by this point (ternary points count twice).
    pub fn concave_angles(&self) -> Vec<f64> {
        match self.kind {
            IrregularKind::ConvexBinary => vec![],
            IrregularKind::ConcaveBinary { beta } | IrregularKind::Angle { beta } => vec![beta],
            IrregularKind::ConcaveTernary { beta1, beta2 } => vec![beta1, beta2],
        }
    }
}

/// A closed loop of edges, stored in traversal order.
#[derive(Debug, Clone)]
pub struct Loop {
    pub edges: Vec<Edge>,
}

impl Loop {
    pub fn signed_area(&self) -> f64 {
        self.edges.iter().map(Edge::area_contribution).sum()
    }

    pub fn length(&self) -> f64 {
        self.edges.iter().map(Edge::length).sum()
    }

    pub fn reversed(&self) -> Loop {
        Loop {
            edges: self.edges.iter().rev().map(Edge::reversed).collect(),
        }
    }

    /// Sum of exterior turning angles at vertices plus integrated signed
    /// curvature over the edges.
    pub fn total_turning(&self) -> f64 {
        let n = self.edges.len();
        let mut total: f64 = self.edges.iter().map(Edge::turning).sum();
        for i in 0..n {
            let t1 = self.edges[i].end_tangent();
            let t2 = self.edges[(i + 1) % n].start_tangent();
            total += t1.signed_angle_to(t2);
        }
        total
    }
}

/// An open (or, for pure curves, possibly closed) chain of edges.
#[derive(Debug, Clone)]
pub struct Chain {
    pub edges: Vec<Edge>,
}

impl Chain {
    pub fn length(&self) -> f64 {
        self.edges.iter().map(Edge::length).sum()
    }

    pub fn is_closed(&self) -> bool {
        let first = self.edges.first().expect("non-empty chain");
        let last = self.edges.last().expect("non-empty chain");
        last.end().dist(first.start()) <= COINCIDENCE_TOL
    }
}

#[derive(Debug, Clone)]
pub enum Component {
    /// Component with non-empty interior: outer boundary, holes, whiskers.
    Region {
        outer: Loop,
        holes: Vec<Loop>,
        whiskers: Vec<Chain>,
    },
    /// Pure curve with empty interior.
    Curve(Chain),
    /// Degenerate single-point component (convex: contributes 1 to chi and
    /// nothing to area or boundary length).
    Point(Point),
}

#[derive(Debug, Clone)]
pub struct PlanarSet {
    pub components: Vec<Component>,
    pub irregular_points: Vec<IrregularPoint>,
}

/// Exact or fitted 2D Steiner coefficients of `area(S^{+eps}) =
/// sigma2 + eps*L1 + pi*eps^2*L0 + o(eps^2)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SteinerCoeffs2D {
    pub sigma2: f64,
    pub l1: f64,
    pub l0: f64,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Exact,
    Fitted,
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

fn check_chain(edges: &[Edge]) -> Result<(), GeometryError> {
    if edges.is_empty() {
        return Err(GeometryError::InvalidEdge("empty edge list".into()));
    }
    for e in edges {
        e.validate()?;
    }
    for pair in edges.windows(2) {
        let gap = pair[0].end().dist(pair[1].start());
        if gap > COINCIDENCE_TOL {
            let p = pair[0].end();
            return Err(GeometryError::BrokenChain {
                gap,
                x: p.x,
                y: p.y,
            });
        }
    }
    Ok(())
}

fn check_loop(edges: &[Edge]) -> Result<(), GeometryError> {
    check_chain(edges)?;
    let first = edges.first().unwrap();
    let last = edges.last().unwrap();
    if last.end().dist(first.start()) > COINCIDENCE_TOL {
        return Err(GeometryError::NotClosed);
    }
    Ok(())
}

/// Strict proper-crossing test between two segments (touching endpoints do
/// not count).
fn segments_cross(a0: Point, a1: Point, b0: Point, b1: Point) -> bool {
    let d1 = (a1 - a0).cross(b0 - a0);
    let d2 = (a1 - a0).cross(b1 - a0);
    let d3 = (b1 - b0).cross(a0 - b0);
    let d4 = (b1 - b0).cross(a1 - b0);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

fn flatten_edge(e: &Edge, tol: f64) -> Vec<Point> {
    let mut pts = Vec::new();
    match e {
        Edge::Segment { from, to } => {
            pts.push(*from);
            pts.push(*to);
        }
        Edge::Arc { radius, .. } => {
            // Chord count chosen so the sagitta stays below `tol`.
            let max_theta = 2.0 * (1.0 - (tol / radius).min(1.0)).acos().max(1e-3);
            let n = (e.sweep() / max_theta).ceil().max(4.0) as usize;
            for i in 0..=n {
                pts.push(e.point_at(i as f64 / n as f64));
            }
        }
    }
    pts
}

fn edges_cross(e1: &Edge, e2: &Edge) -> bool {
    let tol = 1e-4 * (e1.length() + e2.length());
    let p1 = flatten_edge(e1, tol);
    let p2 = flatten_edge(e2, tol);
    for a in p1.windows(2) {
        for b in p2.windows(2) {
            if segments_cross(a[0], a[1], b[0], b[1]) {
                return true;
            }
        }
    }
    false
}

fn check_no_crossings(groups: &[&[Edge]]) -> Result<(), GeometryError> {
    let all: Vec<&Edge> = groups.iter().flat_map(|g| g.iter()).collect();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            if edges_cross(all[i], all[j]) {
                return Err(GeometryError::SelfIntersecting);
            }
        }
    }
    Ok(())
}

/// Edge tangent (direction of travel) at a point assumed to lie on the edge.
fn tangent_at(e: &Edge, p: Point) -> Point {
    match e {
        Edge::Segment { from, to } => (*to - *from).normalized(),
        Edge::Arc { center, ccw, .. } => {
            let phi = (p - *center).angle();
            if *ccw {
                Point::new(-phi.sin(), phi.cos())
            } else {
                Point::new(phi.sin(), -phi.cos())
            }
        }
    }
}

/// One classified junction on a boundary loop, before whisker merging.
struct LoopVertex {
    location: Point,
    incoming: Point,
    outgoing: Point,
    /// Signed exterior turning angle, positive for locally convex vertices
    /// on a positively oriented boundary.
    turn: f64,
}

fn loop_vertices(lp: &Loop) -> Result<Vec<LoopVertex>, GeometryError> {
    let n = lp.edges.len();
    let mut out = Vec::new();
    for i in 0..n {
        let t1 = lp.edges[i].end_tangent();
        let t2 = lp.edges[(i + 1) % n].start_tangent();
        let turn = t1.signed_angle_to(t2);
        if turn.abs() < ANGLE_TOL {
            continue;
        }
        if (PI - turn.abs()) < ANGLE_TOL {
            return Err(GeometryError::ExcludedConfiguration(
                "cusp: tangent reverses at a boundary vertex".into(),
            ));
        }
        out.push(LoopVertex {
            location: lp.edges[i].end(),
            incoming: t1,
            outgoing: t2,
            turn,
        });
    }
    Ok(out)
}

/// Attachment of a whisker onto the boundary of a region component.
enum Attachment {
    /// Attached at an existing loop vertex (index into the vertex list).
    AtVertex(usize),
    /// Attached on the smooth interior of an edge; carries the boundary
    /// tangent there.
    OnEdge(Point),
}

fn locate_attachment(
    p: Point,
    vertices: &[LoopVertex],
    loops: &[&Loop],
) -> Result<Attachment, GeometryError> {
    for (i, v) in vertices.iter().enumerate() {
        if v.location.dist(p) <= COINCIDENCE_TOL {
            return Ok(Attachment::AtVertex(i));
        }
    }
    for lp in loops {
        for e in &lp.edges {
            if e.distance(p) <= COINCIDENCE_TOL {
                return Ok(Attachment::OnEdge(tangent_at(e, p)));
            }
        }
    }
    Err(GeometryError::WhiskerNotAttached)
}

fn classify_ternary(
    location: Point,
    incoming: Point,
    outgoing: Point,
    whisker_dir: Point,
) -> Result<IrregularPoint, GeometryError> {
    let beta1 = incoming.angle_between(whisker_dir);
    let beta2 = (-whisker_dir).angle_between(outgoing);
    if beta1 >= PI - ANGLE_TOL || beta2 >= PI - ANGLE_TOL {
        return Err(GeometryError::ExcludedConfiguration(
            "ternary point with a concave angle of pi".into(),
        ));
    }
    if beta1 + beta2 > PI + ANGLE_TOL {
        return Err(GeometryError::ExcludedConfiguration(format!(
            "ternary point with beta1 + beta2 = {} > pi",
            beta1 + beta2
        )));
    }
    Ok(IrregularPoint {
        location,
        kind: IrregularKind::ConcaveTernary { beta1, beta2 },
    })
}

/// Angle points at the interior junctions of a chain (and, for closed
/// chains, at the wrap-around junction).
fn chain_angle_points(chain: &Chain) -> Result<Vec<IrregularPoint>, GeometryError> {
    let mut out = Vec::new();
    let n = chain.edges.len();
    let junctions = if chain.is_closed() && n > 1 { n } else { n - 1 };
    for i in 0..junctions {
        let t1 = chain.edges[i].end_tangent();
        let t2 = chain.edges[(i + 1) % n].start_tangent();
        let beta = t1.angle_between(t2);
        if beta < ANGLE_TOL {
            continue;
        }
        if beta >= PI - ANGLE_TOL {
            return Err(GeometryError::ExcludedConfiguration(
                "curve folds back onto itself (beta = pi)".into(),
            ));
        }
        out.push(IrregularPoint {
            location: chain.edges[i].end(),
            kind: IrregularKind::Angle { beta },
        });
    }
    Ok(out)
}

impl PlanarSet {
    /// Assemble and validate a planar set from raw component descriptions.
    ///
    /// Boundary loops are re-oriented so that outer loops run ccw and holes
    /// cw; whisker chains are re-oriented so that the attached extremity
    /// comes first. Every non-smooth vertex is classified.
    pub fn build(raw_components: Vec<RawComponent>) -> Result<PlanarSet, GeometryError> {
        let mut components = Vec::new();
        let mut irregular_points = Vec::new();

        for raw in raw_components {
            match raw {
                RawComponent::Point(p) => {
                    if !p.is_finite() {
                        return Err(GeometryError::InvalidEdge("non-finite point".into()));
                    }
                    components.push(Component::Point(p));
                }
                RawComponent::Curve(edges) => {
                    check_chain(&edges)?;
                    check_no_crossings(&[&edges])?;
                    let chain = Chain { edges };
                    irregular_points.extend(chain_angle_points(&chain)?);
                    if chain.is_closed() && chain.edges.len() > 1 {
                        let lp = Loop {
                            edges: chain.edges.clone(),
                        };
                        let got = lp.total_turning();
                        if (got.abs() - TAU).abs() > TURNING_TOL {
                            return Err(GeometryError::TurningIdentity {
                                got,
                                expected: TAU,
                            });
                        }
                    }
                    components.push(Component::Curve(chain));
                }
                RawComponent::Region {
                    outer,
                    holes,
                    whiskers,
                } => {
                    check_loop(&outer)?;
                    let mut outer = Loop { edges: outer };
                    if outer.signed_area() < 0.0 {
                        outer = outer.reversed();
                    }
                    let mut hole_loops = Vec::new();
                    for h in holes {
                        check_loop(&h)?;
                        let mut lp = Loop { edges: h };
                        if lp.signed_area() > 0.0 {
                            lp = lp.reversed();
                        }
                        hole_loops.push(lp);
                    }

                    {
                        let mut groups: Vec<&[Edge]> = vec![&outer.edges];
                        for h in &hole_loops {
                            groups.push(&h.edges);
                        }
                        check_no_crossings(&groups)?;
                    }

                    for (lp, expected) in std::iter::once((&outer, TAU))
                        .chain(hole_loops.iter().map(|h| (h, -TAU)))
                    {
                        let got = lp.total_turning();
                        if (got - expected).abs() > TURNING_TOL {
                            return Err(GeometryError::TurningIdentity { got, expected });
                        }
                    }

                    let mut vertices = loop_vertices(&outer)?;
                    for h in &hole_loops {
                        vertices.extend(loop_vertices(h)?);
                    }

                    let mut whisker_chains = Vec::new();
                    let all_loops: Vec<&Loop> =
                        std::iter::once(&outer).chain(hole_loops.iter()).collect();
                    let mut used_vertices = vec![false; vertices.len()];
                    let mut attachment_points: Vec<Point> = Vec::new();
                    let mut ternary = Vec::new();
                    for w in whiskers {
                        check_chain(&w)?;
                        let mut chain = Chain { edges: w };
                        if chain.is_closed() {
                            return Err(GeometryError::ExcludedConfiguration(
                                "whisker chain forms a closed loop".into(),
                            ));
                        }
                        let start = chain.edges.first().unwrap().start();
                        let end = chain.edges.last().unwrap().end();
                        let start_attach = locate_attachment(start, &vertices, &all_loops);
                        let attachment = match start_attach {
                            Ok(a) => a,
                            Err(_) => {
                                // Try the other extremity before giving up.
                                let a = locate_attachment(end, &vertices, &all_loops)?;
                                chain = Chain {
                                    edges: chain.edges.iter().rev().map(Edge::reversed).collect(),
                                };
                                a
                            }
                        };
                        let p = chain.edges.first().unwrap().start();
                        if attachment_points
                            .iter()
                            .any(|q| q.dist(p) <= COINCIDENCE_TOL)
                        {
                            return Err(GeometryError::ExcludedConfiguration(
                                "vertex of order >= 4: two whiskers share an attachment point"
                                    .into(),
                            ));
                        }
                        attachment_points.push(p);
                        let w_dir = chain.edges.first().unwrap().start_tangent();
                        let point = match attachment {
                            Attachment::AtVertex(i) => {
                                used_vertices[i] = true;
                                let v = &vertices[i];
                                classify_ternary(v.location, v.incoming, v.outgoing, w_dir)?
                            }
                            Attachment::OnEdge(t) => classify_ternary(p, t, t, w_dir)?,
                        };
                        ternary.push(point);
                        irregular_points.extend(chain_angle_points(&chain)?);
                        whisker_chains.push(chain);
                    }

                    // Binary classification for the vertices not absorbed
                    // into ternary points.
                    for (v, used) in vertices.iter().zip(&used_vertices) {
                        if *used {
                            continue;
                        }
                        let kind = if v.turn >= 0.0 {
                            IrregularKind::ConvexBinary
                        } else {
                            IrregularKind::ConcaveBinary { beta: -v.turn }
                        };
                        irregular_points.push(IrregularPoint {
                            location: v.location,
                            kind,
                        });
                    }
                    irregular_points.extend(ternary);

                    let mut groups: Vec<&[Edge]> = vec![&outer.edges];
                    for h in &hole_loops {
                        groups.push(&h.edges);
                    }
                    for w in &whisker_chains {
                        groups.push(&w.edges);
                    }
                    check_no_crossings(&groups)?;

                    components.push(Component::Region {
                        outer,
                        holes: hole_loops,
                        whiskers: whisker_chains,
                    });
                }
            }
        }

        Ok(PlanarSet {
            components,
            irregular_points,
        })
    }

    /// Euler characteristic: components minus holes for sets with interior,
    /// components minus loops for pure curves.
    pub fn euler_characteristic(&self) -> i64 {
        self.components
            .iter()
            .map(|c| match c {
                Component::Region { holes, .. } => 1 - holes.len() as i64,
                Component::Curve(chain) => {
                    if chain.is_closed() && chain.edges.len() > 1 {
                        0
                    } else {
                        1
                    }
                }
                Component::Point(_) => 1,
            })
            .sum()
    }

    /// Total length of non-isolated edges plus twice the length of isolated
    /// (whisker and pure-curve) edges.
    pub fn outer_minkowski_content(&self) -> f64 {
        self.components
            .iter()
            .map(|c| match c {
                Component::Region {
                    outer,
                    holes,
                    whiskers,
                } => {
                    outer.length()
                        + holes.iter().map(Loop::length).sum::<f64>()
                        + 2.0 * whiskers.iter().map(Chain::length).sum::<f64>()
                }
                Component::Curve(chain) => 2.0 * chain.length(),
                Component::Point(_) => 0.0,
            })
            .sum()
    }

    /// Area of the interior (zero for pure curves).
    pub fn area(&self) -> f64 {
        self.components
            .iter()
            .map(|c| match c {
                Component::Region { outer, holes, .. } => {
                    outer.signed_area() + holes.iter().map(Loop::signed_area).sum::<f64>()
                }
                Component::Curve(_) | Component::Point(_) => 0.0,
            })
            .sum()
    }

    /// `(1/pi) * sum_i (beta_i/2 - tan(beta_i/2))` over all concave angles.
    pub fn concavity_correction(&self) -> f64 {
        let s: f64 = self
            .irregular_points
            .iter()
            .flat_map(|p| p.concave_angles())
            .map(concavity_summand)
            .sum();
        s / PI
    }

    /// Exact Steiner coefficients `(sigma2, L1, L0)`.
    pub fn steiner_coefficients(&self) -> SteinerCoeffs2D {
        SteinerCoeffs2D {
            sigma2: self.area(),
            l1: self.outer_minkowski_content(),
            l0: self.euler_characteristic() as f64 + self.concavity_correction(),
            provenance: Provenance::Exact,
        }
    }

    /// All boundary, whisker and curve edges.
    pub fn all_edges(&self) -> impl Iterator<Item = &Edge> {
        self.components.iter().flat_map(|c| {
            let groups: Vec<&[Edge]> = match c {
                Component::Region {
                    outer,
                    holes,
                    whiskers,
                } => std::iter::once(outer.edges.as_slice())
                    .chain(holes.iter().map(|h| h.edges.as_slice()))
                    .chain(whiskers.iter().map(|w| w.edges.as_slice()))
                    .collect(),
                Component::Curve(chain) => vec![chain.edges.as_slice()],
                Component::Point(_) => vec![],
            };
            groups.into_iter().flatten()
        })
    }

    /// Closed rings (outer and holes) of every region component, flattened
    /// into polylines with sagitta at most `tol`. Used for even-odd
    /// point-in-region tests.
    pub fn region_rings(&self, tol: f64) -> Vec<Vec<Point>> {
        let mut rings = Vec::new();
        for c in &self.components {
            if let Component::Region { outer, holes, .. } = c {
                for lp in std::iter::once(outer).chain(holes.iter()) {
                    let mut ring = Vec::new();
                    for e in &lp.edges {
                        let pts = flatten_edge(e, tol);
                        ring.extend_from_slice(&pts[..pts.len() - 1]);
                    }
                    rings.push(ring);
                }
            }
        }
        rings
    }

    /// Axis-aligned bounding box over all edges.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut take = |p: Point| {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        };
        for e in self.all_edges() {
            for p in flatten_edge(e, 1e-6) {
                take(p);
            }
        }
        for c in &self.components {
            if let Component::Point(p) = c {
                take(*p);
            }
        }
        (lo, hi)
    }

    pub fn diameter(&self) -> f64 {
        let (lo, hi) = self.bounding_box();
        hi.dist(lo)
    }
}

/// Raw, unvalidated component description (the JSON-facing shape).
pub enum RawComponent {
    Region {
        outer: Vec<Edge>,
        holes: Vec<Vec<Edge>>,
        whiskers: Vec<Vec<Edge>>,
    },
    Curve(Vec<Edge>),
    Point(Point),
}

// ---------------------------------------------------------------------------
// Closed-form tube constants
// ---------------------------------------------------------------------------

/// The concavity summand `beta/2 - tan(beta/2)` that a reflex vertex
/// contributes to the Euler-characteristic coefficient.
pub fn concavity_summand(beta: f64) -> f64 {
    beta / 2.0 - (beta / 2.0).tan()
}

/// Intersection-tube constants `(C13, C123)` for a concave vertex of angle
/// `beta`: the eps^2 coefficients of `area(S1^eps ∩ S3^eps)` and
/// `area(S1^eps ∩ S2^eps ∩ S3^eps)` in the three-piece decomposition.
pub fn intersection_tube_constants(beta: f64) -> Result<(f64, f64), GeometryError> {
    if !(0.0..PI).contains(&beta) {
        return Err(GeometryError::ExcludedConfiguration(format!(
            "concave angle beta = {beta} outside [0, pi)"
        )));
    }
    let c13 = (PI - beta) + 2.0 * (beta / 2.0).tan();
    let c123 = (PI - beta) + beta / 2.0 + (beta / 2.0).tan();
    Ok((c13, c123))
}

/// Glue Steiner coefficients of `S = S1 ∪ S2 ∪ S3 ∪ S4` from the parts and
/// the pairwise unions, with the `(C123 - C13)/pi` concavity correction.
///
/// `sigma2` may be supplied; otherwise the union area is the sum of the part
/// areas (disjoint interiors).
pub fn glue_coefficients(
    parts: &[SteinerCoeffs2D],
    pairwise_unions: &[SteinerCoeffs2D],
    c13: f64,
    c123: f64,
    sigma2: Option<f64>,
) -> SteinerCoeffs2D {
    let part_l1: f64 = parts.iter().map(|c| c.l1).sum();
    let part_l0: f64 = parts.iter().map(|c| c.l0).sum();
    let union_l1: f64 = pairwise_unions.iter().map(|c| c.l1).sum();
    let union_l0: f64 = pairwise_unions.iter().map(|c| c.l0).sum();
    SteinerCoeffs2D {
        sigma2: sigma2.unwrap_or_else(|| parts.iter().map(|c| c.sigma2).sum()),
        l1: union_l1 - part_l1,
        l0: union_l0 - part_l0 + (c123 - c13) / PI,
        provenance: Provenance::Exact,
    }
}

/// Intersection area of the tubes around a circle of radius `r` and a
/// tangent segment (both through the tangency point), exact and two-term
/// asymptotic `(pi/2) eps^2 + (8/3) sqrt(r) eps^{3/2}`.
#[derive(Debug, Clone, Copy)]
pub struct TangentPairArea {
    pub exact: f64,
    pub asymptotic: f64,
}

pub fn tangent_pair_intersection_area(r: f64, eps: f64) -> Result<TangentPairArea, GeometryError> {
    if !(r > 0.0) {
        return Err(GeometryError::ExcludedConfiguration(
            "tangent pair requires r > 0".into(),
        ));
    }
    if !(eps > 0.0 && eps < r) {
        return Err(GeometryError::ExcludedConfiguration(
            "tangent pair requires 0 < eps < r".into(),
        ));
    }
    let exact = PI / 2.0 * eps * eps
        + (r + eps).powi(2) / 2.0 * (2.0 * (r * eps).sqrt() / (r + eps)).asin()
        - (r - eps) * (r * eps).sqrt();
    let asymptotic = PI / 2.0 * eps * eps + 8.0 / 3.0 * r.sqrt() * eps.powf(1.5);
    Ok(TangentPairArea { exact, asymptotic })
}
