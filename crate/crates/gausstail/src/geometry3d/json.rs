//! JSON schema for 3D geometry: either a list of axis-aligned boxes or an
//! explicit polytope summary.
//!
//! ```json
//! {"dimension": 3, "boxes": [{"min": [0,0,0], "max": [1,1,1]}]}
//! {"dimension": 3, "volume": 1.0, "surface_area": 6.0,
//!  "edges": [{"length": 12.0, "dihedral": 1.5707963267948966}]}
//! ```

use serde::Deserialize;

use super::{box_union, Box3, EdgeSummary, Geometry3dError, PolytopeSummary};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    length: f64,
    dihedral: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SetDoc {
    dimension: u32,
    #[serde(default)]
    boxes: Option<Vec<Box3>>,
    #[serde(default)]
    volume: Option<f64>,
    #[serde(default)]
    surface_area: Option<f64>,
    #[serde(default)]
    edges: Option<Vec<EdgeDoc>>,
}

/// Parse and validate a 3D geometry document into a polytope summary.
pub fn validate_set(json: &str) -> Result<PolytopeSummary, Geometry3dError> {
    let doc: SetDoc =
        serde_json::from_str(json).map_err(|e| Geometry3dError::Json(e.to_string()))?;
    if doc.dimension != 3 {
        return Err(Geometry3dError::Json(format!(
            "expected dimension 3, got {}",
            doc.dimension
        )));
    }
    match (doc.boxes, doc.volume, doc.surface_area, doc.edges) {
        (Some(boxes), None, None, None) => box_union(&boxes),
        (None, Some(volume), Some(surface_area), Some(edges)) => {
            let summary = PolytopeSummary {
                volume,
                surface_area,
                edges: edges
                    .into_iter()
                    .map(|e| EdgeSummary {
                        length: e.length,
                        internal_dihedral: e.dihedral,
                    })
                    .collect(),
            };
            summary.validate()?;
            Ok(summary)
        }
        _ => Err(Geometry3dError::Json(
            "provide either \"boxes\" or all of \"volume\", \"surface_area\", \"edges\"".into(),
        )),
    }
}
