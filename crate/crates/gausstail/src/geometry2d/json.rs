//! JSON schema for 2D geometry input.
//!
//! ```json
//! {"dimension": 2,
//!  "components": [
//!    {"outer": [EDGE, ...],
//!     "holes": [[EDGE, ...], ...],
//!     "whiskers": [[EDGE, ...], ...]}
//!  ]}
//! ```
//!
//! with `EDGE` one of
//! `{"type":"segment","from":[x,y],"to":[x,y]}` or
//! `{"type":"arc","center":[x,y],"radius":r,"from_angle":a0,"to_angle":a1,"ccw":bool}`.
//! Pure-curve components use `{"curve":[EDGE,...]}` in place of `"outer"`;
//! a degenerate single-point component is `{"point":[x,y]}`.

use serde::Deserialize;

use super::{Edge, GeometryError, PlanarSet, RawComponent};
use crate::point::Point;

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum EdgeSpec {
    Segment {
        from: [f64; 2],
        to: [f64; 2],
    },
    Arc {
        center: [f64; 2],
        radius: f64,
        from_angle: f64,
        to_angle: f64,
        ccw: bool,
    },
}

impl From<EdgeSpec> for Edge {
    fn from(spec: EdgeSpec) -> Edge {
        match spec {
            EdgeSpec::Segment { from, to } => Edge::Segment {
                from: Point::new(from[0], from[1]),
                to: Point::new(to[0], to[1]),
            },
            EdgeSpec::Arc {
                center,
                radius,
                from_angle,
                to_angle,
                ccw,
            } => Edge::Arc {
                center: Point::new(center[0], center[1]),
                radius,
                from_angle,
                to_angle,
                ccw,
            },
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    #[serde(default)]
    pub outer: Option<Vec<EdgeSpec>>,
    #[serde(default)]
    pub curve: Option<Vec<EdgeSpec>>,
    #[serde(default)]
    pub point: Option<[f64; 2]>,
    #[serde(default)]
    pub holes: Vec<Vec<EdgeSpec>>,
    #[serde(default)]
    pub whiskers: Vec<Vec<EdgeSpec>>,
}

#[derive(Debug, Deserialize)]
pub struct PlanarSetSpec {
    pub dimension: u32,
    pub components: Vec<ComponentSpec>,
}

fn to_edges(specs: Vec<EdgeSpec>) -> Vec<Edge> {
    specs.into_iter().map(Edge::from).collect()
}

/// Parse and validate a 2D geometry document.
pub fn validate_set(json: &str) -> Result<PlanarSet, GeometryError> {
    let spec: PlanarSetSpec =
        serde_json::from_str(json).map_err(|e| GeometryError::Json(e.to_string()))?;
    if spec.dimension != 2 {
        return Err(GeometryError::Json(format!(
            "expected dimension 2, got {}",
            spec.dimension
        )));
    }
    from_spec(spec)
}

pub fn from_spec(spec: PlanarSetSpec) -> Result<PlanarSet, GeometryError> {
    let mut raw = Vec::new();
    for c in spec.components {
        match (c.outer, c.curve, c.point) {
            (Some(outer), None, None) => raw.push(RawComponent::Region {
                outer: to_edges(outer),
                holes: c.holes.into_iter().map(to_edges).collect(),
                whiskers: c.whiskers.into_iter().map(to_edges).collect(),
            }),
            (None, Some(curve), None) => {
                if !c.holes.is_empty() || !c.whiskers.is_empty() {
                    return Err(GeometryError::Json(
                        "curve components cannot carry holes or whiskers".into(),
                    ));
                }
                raw.push(RawComponent::Curve(to_edges(curve)));
            }
            (None, None, Some(p)) => {
                if !c.holes.is_empty() || !c.whiskers.is_empty() {
                    return Err(GeometryError::Json(
                        "point components cannot carry holes or whiskers".into(),
                    ));
                }
                raw.push(RawComponent::Point(Point::new(p[0], p[1])));
            }
            _ => {
                return Err(GeometryError::Json(
                    "each component needs exactly one of \"outer\", \"curve\" or \"point\"".into(),
                ))
            }
        }
    }
    PlanarSet::build(raw)
}
