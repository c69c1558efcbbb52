use std::f64::consts::PI;

use super::*;

fn assert_close(a: f64, b: f64, tol: f64) {
    assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
}

fn cube_summary() -> PolytopeSummary {
    PolytopeSummary {
        volume: 1.0,
        surface_area: 6.0,
        edges: vec![EdgeSummary {
            length: 12.0,
            internal_dihedral: PI / 2.0,
        }],
    }
}

#[test]
fn cube_coefficients() {
    let c = polytope_coefficients(&cube_summary()).unwrap();
    assert_close(c.l3, 1.0, 1e-15);
    assert_close(c.l2, 3.0, 1e-15);
    assert_close(c.l1, 3.0, 1e-15);
}

#[test]
fn box_1x1x2_coefficients() {
    // All 12 edges convex right angles, total length 16: L1 = 16/4 = 4.
    let p = box_union(&[Box3 {
        min: [0.0, 0.0, 0.0],
        max: [1.0, 1.0, 2.0],
    }])
    .unwrap();
    let c = polytope_coefficients(&p).unwrap();
    assert_close(c.l3, 2.0, 1e-12);
    assert_close(c.l2, 5.0, 1e-12);
    assert_close(c.l1, 4.0, 1e-12);
}

#[test]
fn concave_edge_sign() {
    // A reflex edge (internal dihedral 3*pi/2) reduces L1: cot(3*pi/4) = -1.
    let p = PolytopeSummary {
        volume: 3.0,
        surface_area: 14.0,
        edges: vec![
            EdgeSummary {
                length: 21.0,
                internal_dihedral: PI / 2.0,
            },
            EdgeSummary {
                length: 1.0,
                internal_dihedral: 3.0 * PI / 2.0,
            },
        ],
    };
    let c = polytope_coefficients(&p).unwrap();
    assert_close(c.l1, 21.0 / 4.0 - 1.0 / PI, 1e-14);
}

#[test]
fn summary_validation() {
    let mut p = cube_summary();
    p.edges[0].internal_dihedral = 2.0 * PI;
    assert!(matches!(
        polytope_coefficients(&p),
        Err(Geometry3dError::DihedralOutOfRange(_))
    ));
    let mut p = cube_summary();
    p.edges[0].length = 0.0;
    assert!(polytope_coefficients(&p).is_err());
    let mut p = cube_summary();
    p.volume = -1.0;
    assert!(polytope_coefficients(&p).is_err());
}

#[test]
fn subtraction_constant() {
    assert_close(
        dihedral_subtraction_constant(PI / 2.0).unwrap(),
        (3.0 * PI / 4.0 + 1.0) / PI,
        1e-15,
    );
    assert_close(
        dihedral_subtraction_constant(PI / 2.0).unwrap(),
        1.0683098861837907,
        1e-12,
    );
    // Flat limit: coincident sheets counted once.
    assert_close(dihedral_subtraction_constant(PI - 1e-9).unwrap(), 1.0, 1e-8);
    // Cot singularity as alpha -> 0+.
    assert!(dihedral_subtraction_constant(1e-9).unwrap() > 1e8);
    assert!(dihedral_subtraction_constant(0.0).is_err());
    assert!(dihedral_subtraction_constant(PI).is_err());
}

#[test]
fn single_box_is_cube() {
    let p = box_union(&[Box3 {
        min: [0.0, 0.0, 0.0],
        max: [1.0, 1.0, 1.0],
    }])
    .unwrap();
    assert_close(p.volume, 1.0, 1e-15);
    assert_close(p.surface_area, 6.0, 1e-15);
    assert_eq!(p.edges.len(), 1);
    assert_close(p.edges[0].length, 12.0, 1e-12);
    assert_close(p.edges[0].internal_dihedral, PI / 2.0, 1e-15);
}

#[test]
fn stacked_boxes_merge() {
    // Two stacked unit boxes equal the 1x1x2 box: shared face removed,
    // flat continuation edges not counted.
    let p = box_union(&[
        Box3 {
            min: [0.0, 0.0, 0.0],
            max: [1.0, 1.0, 1.0],
        },
        Box3 {
            min: [0.0, 0.0, 1.0],
            max: [1.0, 1.0, 2.0],
        },
    ])
    .unwrap();
    assert_close(p.volume, 2.0, 1e-12);
    assert_close(p.surface_area, 10.0, 1e-12);
    let (convex, concave) = p.edge_lengths();
    assert_close(convex, 16.0, 1e-12);
    assert_close(concave, 0.0, 0.0);
}

#[test]
fn l_shape_box_union() {
    // L-shaped solid: 2x1x1 slab plus a unit box on top of its left half.
    // One concave edge of length 1; convex edges total 21.
    let p = box_union(&[
        Box3 {
            min: [0.0, 0.0, 0.0],
            max: [2.0, 1.0, 1.0],
        },
        Box3 {
            min: [0.0, 0.0, 1.0],
            max: [1.0, 1.0, 2.0],
        },
    ])
    .unwrap();
    assert_close(p.volume, 3.0, 1e-12);
    assert_close(p.surface_area, 14.0, 1e-12);
    let (convex, concave) = p.edge_lengths();
    assert_close(convex, 21.0, 1e-12);
    assert_close(concave, 1.0, 1e-12);
    let c = polytope_coefficients(&p).unwrap();
    assert_close(c.l1, 21.0 / 4.0 - 1.0 / PI, 1e-12);
}

#[test]
fn box_union_inclusion_exclusion() {
    // Disjoint-interior boxes: volume adds exactly; surface area is the sum
    // minus twice each shared face.
    let a = Box3 {
        min: [0.0, 0.0, 0.0],
        max: [1.0, 2.0, 1.0],
    };
    let b = Box3 {
        min: [1.0, 0.0, 0.0],
        max: [3.0, 2.0, 1.0],
    };
    let p = box_union(&[a, b]).unwrap();
    assert_close(p.volume, 2.0 + 4.0, 1e-12);
    let sa = 2.0 * (1.0 * 2.0 + 2.0 * 1.0 + 1.0 * 1.0);
    let sb = 2.0 * (2.0 * 2.0 + 2.0 * 1.0 + 2.0 * 1.0);
    assert_close(p.surface_area, sa + sb - 2.0 * 2.0, 1e-12);
}

#[test]
fn box_union_rejects_bad_contact() {
    let unit = Box3 {
        min: [0.0, 0.0, 0.0],
        max: [1.0, 1.0, 1.0],
    };
    // Overlapping interiors.
    let shifted = Box3 {
        min: [0.5, 0.0, 0.0],
        max: [1.5, 1.0, 1.0],
    };
    assert!(matches!(
        box_union(&[unit, shifted]),
        Err(Geometry3dError::OverlappingBoxes)
    ));
    // Edge-only contact (diagonal neighbors).
    let diagonal = Box3 {
        min: [1.0, 1.0, 0.0],
        max: [2.0, 2.0, 1.0],
    };
    assert!(matches!(
        box_union(&[unit, diagonal]),
        Err(Geometry3dError::NonFaceContact)
    ));
    // Vertex-only contact.
    let corner = Box3 {
        min: [1.0, 1.0, 1.0],
        max: [2.0, 2.0, 2.0],
    };
    assert!(matches!(
        box_union(&[unit, corner]),
        Err(Geometry3dError::NonFaceContact)
    ));
    // Degenerate box.
    let flat = Box3 {
        min: [0.0, 0.0, 0.0],
        max: [1.0, 1.0, 0.0],
    };
    assert!(box_union(&[flat]).is_err());
}

#[test]
fn json_box_and_summary_forms() {
    let p = json::validate_set(
        r#"{"dimension": 3, "boxes": [{"min": [0,0,0], "max": [1,1,1]}]}"#,
    )
    .unwrap();
    assert_close(p.volume, 1.0, 1e-15);

    let p = json::validate_set(
        r#"{"dimension": 3, "volume": 1.0, "surface_area": 6.0,
            "edges": [{"length": 12.0, "dihedral": 1.5707963267948966}]}"#,
    )
    .unwrap();
    let c = polytope_coefficients(&p).unwrap();
    assert_close(c.l1, 3.0, 1e-12);

    assert!(json::validate_set(r#"{"dimension": 2, "boxes": []}"#).is_err());
    assert!(json::validate_set(r#"{"dimension": 3}"#).is_err());
    assert!(json::validate_set(
        r#"{"dimension": 3, "boxes": [], "volume": 1.0, "surface_area": 1.0, "edges": []}"#
    )
    .is_err());
}

#[test]
fn partial_face_contact() {
    // Unit tower centered on the top face of a 3x3x1 slab. Around the
    // tower base the slab top face meets the tower side faces at internal
    // dihedral pi + pi/2 = 3*pi/2: four concave edges of length 1.
    let p = box_union(&[
        Box3 {
            min: [0.0, 0.0, 0.0],
            max: [3.0, 3.0, 1.0],
        },
        Box3 {
            min: [1.0, 1.0, 1.0],
            max: [2.0, 2.0, 2.0],
        },
    ])
    .unwrap();
    assert_close(p.volume, 10.0, 1e-12);
    // Slab 2*(9+3+3) = 30, minus contact square counted on the slab top
    // (1), plus tower sides (4) and top (1).
    assert_close(p.surface_area, 30.0 - 1.0 + 5.0, 1e-12);
    let (convex, concave) = p.edge_lengths();
    assert_close(concave, 4.0, 1e-12);
    // Slab: 4 vertical edges (length 1) + 8 horizontal (length 3) = 28;
    // tower: 4 vertical (length 1) + top ring (4) = 8.
    assert_close(convex, 28.0 + 8.0, 1e-12);
}
