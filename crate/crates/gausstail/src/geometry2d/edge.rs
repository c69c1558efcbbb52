use std::f64::consts::TAU;

use crate::geometry2d::GeometryError;
use crate::point::Point;

/// A piecewise-C2 boundary primitive: straight segment or circular arc.
///
/// Arcs are parameterized by center, radius and the start/end polar angles;
/// `ccw` selects the traversal orientation. The swept angle is always taken
/// in (0, 2*pi): a full circle must be split into at least two arcs.
#[derive(Debug, Clone, PartialEq)]
pub enum Edge {
    Segment {
        from: Point,
        to: Point,
    },
    Arc {
        center: Point,
        radius: f64,
        from_angle: f64,
        to_angle: f64,
        ccw: bool,
    },
}

fn wrap_positive(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r == 0.0 {
        TAU
    } else {
        r
    }
}

impl Edge {
    pub fn validate(&self) -> Result<(), GeometryError> {
        match self {
            Edge::Segment { from, to } => {
                if !from.is_finite() || !to.is_finite() {
                    return Err(GeometryError::InvalidEdge("non-finite endpoint".into()));
                }
                if from.dist(*to) <= 0.0 {
                    return Err(GeometryError::InvalidEdge("zero-length segment".into()));
                }
            }
            Edge::Arc {
                center,
                radius,
                from_angle,
                to_angle,
                ..
            } => {
                if !center.is_finite() || !radius.is_finite() {
                    return Err(GeometryError::InvalidEdge("non-finite arc".into()));
                }
                if *radius <= 0.0 {
                    return Err(GeometryError::InvalidEdge("non-positive arc radius".into()));
                }
                if !from_angle.is_finite() || !to_angle.is_finite() {
                    return Err(GeometryError::InvalidEdge("non-finite arc angle".into()));
                }
                let sweep = self.sweep();
                if !(sweep > 0.0 && sweep < TAU) {
                    return Err(GeometryError::InvalidEdge(
                        "arc sweep must lie in (0, 2*pi)".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Swept angle magnitude for arcs, in (0, 2*pi]; zero for segments.
    pub fn sweep(&self) -> f64 {
        match self {
            Edge::Segment { .. } => 0.0,
            Edge::Arc {
                from_angle,
                to_angle,
                ccw,
                ..
            } => {
                if *ccw {
                    wrap_positive(to_angle - from_angle)
                } else {
                    wrap_positive(from_angle - to_angle)
                }
            }
        }
    }

    pub fn start(&self) -> Point {
        match self {
            Edge::Segment { from, .. } => *from,
            Edge::Arc {
                center,
                radius,
                from_angle,
                ..
            } => *center + Point::new(from_angle.cos(), from_angle.sin()) * *radius,
        }
    }

    pub fn end(&self) -> Point {
        match self {
            Edge::Segment { to, .. } => *to,
            Edge::Arc {
                center,
                radius,
                to_angle,
                ..
            } => *center + Point::new(to_angle.cos(), to_angle.sin()) * *radius,
        }
    }

    pub fn length(&self) -> f64 {
        match self {
            Edge::Segment { from, to } => from.dist(*to),
            Edge::Arc { radius, .. } => radius * self.sweep(),
        }
    }

    fn arc_tangent(angle: f64, ccw: bool) -> Point {
        if ccw {
            Point::new(-angle.sin(), angle.cos())
        } else {
            Point::new(angle.sin(), -angle.cos())
        }
    }

    /// Unit tangent in the direction of travel at the start point.
    pub fn start_tangent(&self) -> Point {
        match self {
            Edge::Segment { from, to } => (*to - *from).normalized(),
            Edge::Arc {
                from_angle, ccw, ..
            } => Self::arc_tangent(*from_angle, *ccw),
        }
    }

    /// Unit tangent in the direction of travel at the end point.
    pub fn end_tangent(&self) -> Point {
        match self {
            Edge::Segment { from, to } => (*to - *from).normalized(),
            Edge::Arc { to_angle, ccw, .. } => Self::arc_tangent(*to_angle, *ccw),
        }
    }

    /// Integrated signed curvature along the edge (turning-left positive).
    pub fn turning(&self) -> f64 {
        match self {
            Edge::Segment { .. } => 0.0,
            Edge::Arc { ccw, .. } => {
                if *ccw {
                    self.sweep()
                } else {
                    -self.sweep()
                }
            }
        }
    }

    /// Green's-theorem area contribution of the edge, so that the sum over a
    /// closed loop equals the signed enclosed area (ccw positive).
    pub fn area_contribution(&self) -> f64 {
        let a = self.start();
        let b = self.end();
        let chord = 0.5 * a.cross(b);
        match self {
            Edge::Segment { .. } => chord,
            Edge::Arc { radius, .. } => {
                let theta = self.turning();
                chord + 0.5 * radius * radius * (theta - theta.sin())
            }
        }
    }

    /// Exact Euclidean distance from `p` to the edge.
    pub fn distance(&self, p: Point) -> f64 {
        match self {
            Edge::Segment { from, to } => {
                let d = *to - *from;
                let t = ((p - *from).dot(d) / d.dot(d)).clamp(0.0, 1.0);
                p.dist(*from + d * t)
            }
            Edge::Arc {
                center,
                radius,
                from_angle,
                ccw,
                ..
            } => {
                let v = p - *center;
                let phi = v.angle();
                let sweep = self.sweep();
                let offset = if *ccw {
                    (phi - from_angle).rem_euclid(TAU)
                } else {
                    (from_angle - phi).rem_euclid(TAU)
                };
                if offset <= sweep {
                    (v.norm() - radius).abs()
                } else {
                    p.dist(self.start()).min(p.dist(self.end()))
                }
            }
        }
    }

    /// Traversal-reversed copy.
    pub fn reversed(&self) -> Edge {
        match self {
            Edge::Segment { from, to } => Edge::Segment {
                from: *to,
                to: *from,
            },
            Edge::Arc {
                center,
                radius,
                from_angle,
                to_angle,
                ccw,
            } => Edge::Arc {
                center: *center,
                radius: *radius,
                from_angle: *to_angle,
                to_angle: *from_angle,
                ccw: !ccw,
            },
        }
    }

    /// Point at arc-length fraction `t` in [0, 1] along the edge.
    pub fn point_at(&self, t: f64) -> Point {
        match self {
            Edge::Segment { from, to } => *from + (*to - *from) * t,
            Edge::Arc {
                center,
                radius,
                from_angle,
                ccw,
                ..
            } => {
                let a = if *ccw {
                    from_angle + t * self.sweep()
                } else {
                    from_angle - t * self.sweep()
                };
                *center + Point::new(a.cos(), a.sin()) * *radius
            }
        }
    }

    /// Sample points along the edge at arc-length step at most `step`,
    /// including both endpoints.
    pub fn sample(&self, step: f64, out: &mut Vec<Point>) {
        let n = (self.length() / step).ceil().max(1.0) as usize;
        for i in 0..=n {
            out.push(self.point_at(i as f64 / n as f64));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn half_circle(ccw: bool) -> Edge {
        Edge::Arc {
            center: Point::new(0.0, 0.0),
            radius: 2.0,
            from_angle: 0.0,
            to_angle: PI,
            ccw,
        }
    }

    #[test]
    fn arc_basics() {
        let e = half_circle(true);
        assert!((e.length() - 2.0 * PI).abs() < 1e-12);
        assert!(e.start().dist(Point::new(2.0, 0.0)) < 1e-12);
        assert!(e.end().dist(Point::new(-2.0, 0.0)) < 1e-12);
        assert!((e.turning() - PI).abs() < 1e-12);
        let cw = half_circle(false);
        assert!((cw.sweep() - PI).abs() < 1e-12);
        assert!((cw.turning() + PI).abs() < 1e-12);
    }

    #[test]
    fn circle_area_from_two_arcs() {
        let top = half_circle(true);
        let bottom = Edge::Arc {
            center: Point::new(0.0, 0.0),
            radius: 2.0,
            from_angle: PI,
            to_angle: 0.0,
            ccw: true,
        };
        let area = top.area_contribution() + bottom.area_contribution();
        assert!((area - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn arc_distance_cases() {
        let e = half_circle(true);
        // Radially inside the angular sector.
        assert!((e.distance(Point::new(0.0, 1.0)) - 1.0).abs() < 1e-12);
        assert!((e.distance(Point::new(0.0, 3.0)) - 1.0).abs() < 1e-12);
        // Outside the sector: nearest endpoint wins.
        assert!((e.distance(Point::new(0.0, -2.0)) - 2.0 * 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn segment_distance() {
        let e = Edge::Segment {
            from: Point::new(0.0, 0.0),
            to: Point::new(1.0, 0.0),
        };
        assert!((e.distance(Point::new(0.5, 0.3)) - 0.3).abs() < 1e-15);
        assert!((e.distance(Point::new(2.0, 0.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn reversal_swaps_endpoints_and_turning() {
        let e = half_circle(true);
        let r = e.reversed();
        assert!(r.start().dist(e.end()) < 1e-12);
        assert!(r.end().dist(e.start()) < 1e-12);
        assert!((r.turning() + e.turning()).abs() < 1e-12);
        assert!((r.area_contribution() + e.area_contribution()).abs() < 1e-12);
    }
}
