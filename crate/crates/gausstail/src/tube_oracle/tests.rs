use std::f64::consts::PI;

use crate::fixtures;
use crate::geometry3d::Box3;
use crate::point::Point;

use super::*;

fn assert_rel(a: f64, b: f64, tol: f64) {
    assert!(
        (a - b).abs() <= tol * b.abs().max(1e-300),
        "{a} vs {b} (rel tol {tol})"
    );
}

#[test]
fn point_field_is_euclidean_norm() {
    let set = fixtures::point(0.25, -0.5);
    let f = distance_field_2d(&set, 0.5, 0.01, DEFAULT_CELL_CAP).unwrap();
    assert_eq!(f.dimension(), 2);
    for (idx, &v) in f.values.iter().enumerate().step_by(137) {
        let i = idx % f.dims[0];
        let j = idx / f.dims[0];
        let p = Point::new(
            f.origin[0] + (i as f64 + 0.5) * f.h,
            f.origin[1] + (j as f64 + 0.5) * f.h,
        );
        let d = p.dist(Point::new(0.25, -0.5));
        assert!((v as f64 - d).abs() < 1e-6, "cell {idx}: {v} vs {d}");
    }
}

#[test]
fn stadium_and_disk_volumes() {
    // Unit segment: tube is a stadium of area 2*eps + pi*eps^2.
    let set = fixtures::segment_curve((0.0, 0.0), (1.0, 0.0));
    let f = distance_field_2d(&set, 0.08, 5e-4, DEFAULT_CELL_CAP).unwrap();
    let v = tube_volume(&f, 0.05).unwrap();
    assert_rel(v, 2.0 * 0.05 + PI * 0.05 * 0.05, 0.01);

    // Disk of radius 1: tube is the disk of radius 1 + eps.
    let set = fixtures::disk(1.0);
    let f = distance_field_2d(&set, 0.12, 2e-3, DEFAULT_CELL_CAP).unwrap();
    let v = tube_volume(&f, 0.1).unwrap();
    assert_rel(v, PI * 1.1 * 1.1, 0.01);

    // Monotone in eps, and the margin is enforced.
    let a = tube_volume(&f, 0.05).unwrap();
    let b = tube_volume(&f, 0.1).unwrap();
    assert!(a < b);
    assert!(matches!(
        tube_volume(&f, 0.2),
        Err(TubeError::EpsilonExceedsMargin { .. })
    ));
}

#[test]
fn empty_square_tube_volume() {
    // All four sides isolated: 8*eps + (pi - 4)*eps^2.
    let set = fixtures::empty_square();
    let f = distance_field_2d(&set, 0.08, 4e-4, DEFAULT_CELL_CAP).unwrap();
    let v = tube_volume(&f, 0.05).unwrap();
    assert_rel(v, 8.0 * 0.05 + (PI - 4.0) * 0.05 * 0.05, 0.02);
}

#[test]
fn fit_recovers_disk_coefficients() {
    let set = fixtures::disk(1.0);
    let (h, eps) = default_grid_2d(&set);
    let f = distance_field_2d(&set, eps[eps.len() - 1] * 1.05, h, DEFAULT_CELL_CAP).unwrap();
    let fit = fit_steiner(&f, &eps, None).unwrap();
    let c = fit.to_coeffs_2d();
    assert_rel(c.sigma2, PI, 0.005);
    assert_rel(c.l1, 2.0 * PI, 0.02);
    assert!((c.l0 - 1.0).abs() < 0.05, "L0 = {}", c.l0);

    // Pinning the exact area tightens the linear term.
    let fit = fit_steiner(&f, &eps, Some(PI)).unwrap();
    let c = fit.to_coeffs_2d();
    assert_rel(c.sigma2, PI, 1e-12);
    assert_rel(c.l1, 2.0 * PI, 0.02);
}

#[test]
fn fit_input_validation() {
    let set = fixtures::disk(1.0);
    let f = distance_field_2d(&set, 0.1, 5e-3, DEFAULT_CELL_CAP).unwrap();
    assert!(matches!(
        fit_steiner(&f, &[0.01, 0.02, 0.03], None),
        Err(TubeError::InvalidParameter(_))
    ));
    let narrow: Vec<f64> = (0..10).map(|i| 0.05 + 1e-4 * i as f64).collect();
    assert!(matches!(
        fit_steiner(&f, &narrow, None),
        Err(TubeError::IllConditioned { .. })
    ));
}

#[test]
fn grid_cap_enforced() {
    let set = fixtures::disk(1.0);
    assert!(matches!(
        distance_field_2d(&set, 0.1, 1e-4, 10_000),
        Err(TubeError::GridTooLarge { .. })
    ));
}

#[test]
fn resolution_convergence() {
    // Halving h changes the counted tube volume by O(h).
    let set = fixtures::unit_square();
    let coarse = distance_field_2d(&set, 0.12, 4e-3, DEFAULT_CELL_CAP).unwrap();
    let fine = distance_field_2d(&set, 0.12, 2e-3, DEFAULT_CELL_CAP).unwrap();
    let exact = 1.0 + 4.0 * 0.1 + PI * 0.01;
    let ec = (tube_volume(&coarse, 0.1).unwrap() - exact).abs();
    let ef = (tube_volume(&fine, 0.1).unwrap() - exact).abs();
    // Perimeter ~ 4.8; allow 3x the first-order constant.
    assert!(ec <= 3.0 * 4e-3 * 5.0, "coarse error {ec}");
    assert!(ef <= 3.0 * 2e-3 * 5.0, "fine error {ef}");
}

#[test]
fn disjoint_sets_intersect_nowhere() {
    let a = fixtures::point(-1.0, 0.0);
    let b = fixtures::point(1.0, 0.0);
    // Shared window covering both sets.
    let fa = distance_field_2d_bbox(&a, [-2.0, -1.0], [2.0, 1.0], 0.5, 0.01, DEFAULT_CELL_CAP)
        .unwrap();
    let fb = distance_field_2d_bbox(&b, [-2.0, -1.0], [2.0, 1.0], 0.5, 0.01, DEFAULT_CELL_CAP)
        .unwrap();
    assert_eq!(
        intersection_tube_volume(&[fa.clone(), fb.clone()], 0.4).unwrap(),
        0.0
    );
    // Identical grids required.
    let off = distance_field_2d_bbox(&b, [-2.0, -1.0], [2.0, 1.2], 0.5, 0.01, DEFAULT_CELL_CAP)
        .unwrap();
    assert!(matches!(
        intersection_tube_volume(&[fa, off], 0.1),
        Err(TubeError::MismatchedGrids)
    ));
}

#[test]
fn crossing_segments_constant() {
    // Two perpendicular unit segments crossing at their midpoints: the
    // intersection of the tubes near the crossing is a 2eps x 2eps square
    // up to O(eps^3), so C = 4 for (n, d) = (2, 0).
    let horiz = crate::geometry2d::PlanarSet::build(vec![
        crate::geometry2d::RawComponent::Curve(vec![crate::geometry2d::Edge::Segment {
            from: Point::new(-0.5, 0.0),
            to: Point::new(0.5, 0.0),
        }]),
    ])
    .unwrap();
    let vert = crate::geometry2d::PlanarSet::build(vec![
        crate::geometry2d::RawComponent::Curve(vec![crate::geometry2d::Edge::Segment {
            from: Point::new(0.0, -0.5),
            to: Point::new(0.0, 0.5),
        }]),
    ])
    .unwrap();
    let lo = [-0.7, -0.7];
    let hi = [0.7, 0.7];
    let h = 1e-3;
    let fields = vec![
        distance_field_2d_bbox(&horiz, lo, hi, 0.15, h, DEFAULT_CELL_CAP).unwrap(),
        distance_field_2d_bbox(&vert, lo, hi, 0.15, h, DEFAULT_CELL_CAP).unwrap(),
    ];
    let eps = geometric_grid(0.02, 0.1, 8);
    let samples: Vec<(f64, f64)> = eps
        .iter()
        .map(|&e| (e, intersection_tube_volume(&fields, e).unwrap()))
        .collect();
    let est = estimate_intersection_constant(&samples, 2.0, 0.0).unwrap();
    assert_rel(est.c, 4.0, 0.05);
    assert!(!est.mixed_order_warning, "slope {}", est.trend_slope);
}

#[test]
fn mixed_order_detection() {
    // Synthetic volumes following eps^{3/2} flagged when the exponent is
    // forced to 2; a true quadratic law passes quietly.
    let eps = geometric_grid(1e-3, 1e-2, 10);
    let tangent: Vec<(f64, f64)> = eps
        .iter()
        .map(|&e| (e, PI / 2.0 * e * e + 8.0 / 3.0 * e.powf(1.5)))
        .collect();
    let est = estimate_intersection_constant(&tangent, 2.0, 0.0).unwrap();
    assert!(est.mixed_order_warning, "slope {}", est.trend_slope);

    let quad: Vec<(f64, f64)> = eps.iter().map(|&e| (e, 3.0 * e * e)).collect();
    let est = estimate_intersection_constant(&quad, 2.0, 0.0).unwrap();
    assert!(!est.mixed_order_warning);
    assert_rel(est.c, 3.0, 1e-12);

    assert!(estimate_intersection_constant(&quad[..2], 2.0, 0.0).is_err());
    assert!(estimate_intersection_constant(&quad, 2.0, 2.0).is_err());
}

#[test]
fn cube_field_fit() {
    let boxes = [Box3 {
        min: [0.0, 0.0, 0.0],
        max: [1.0, 1.0, 1.0],
    }];
    let f = distance_field_3d(&boxes, 1.05, 0.01, DEFAULT_CELL_CAP).unwrap();
    assert_eq!(f.dimension(), 3);
    let eps = geometric_grid(0.05, 1.0, 32);
    let fit = fit_steiner(&f, &eps, Some(1.0)).unwrap();
    let (l3, l2, l1) = fit.to_coeffs_3d();
    assert_rel(l3, 1.0, 1e-12);
    assert_rel(l2, 3.0, 0.03);
    assert_rel(l1, 3.0, 0.03);
    // The cubic term approximates the convex-body value (4 pi / 3) chi.
    assert_rel(fit.coefficients[3], 4.0 * PI / 3.0, 0.1);
}

#[test]
fn dump_round_trip() {
    let set = fixtures::point(0.0, 0.0);
    let f = distance_field_2d(&set, 0.1, 0.02, DEFAULT_CELL_CAP).unwrap();
    let dir = std::env::temp_dir().join("gausstail_dump_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("field.f32");
    f.dump(&path).unwrap();
    let raw = std::fs::read(&path).unwrap();
    assert_eq!(raw.len(), f.values.len() * 4);
    let first = f32::from_le_bytes(raw[0..4].try_into().unwrap());
    assert_eq!(first, f.values[0]);
    let side: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("field.f32.json")).unwrap())
            .unwrap();
    assert_eq!(side["dims"][0].as_u64().unwrap() as usize, f.dims[0]);
    std::fs::remove_dir_all(&dir).ok();
}
