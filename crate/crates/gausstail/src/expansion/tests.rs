use std::f64::consts::PI;

use crate::fixtures;
use crate::geometry2d::{Provenance, SteinerCoeffs2D};
use crate::geometry3d::{polytope_coefficients, SteinerCoeffs3D};

use super::*;

fn assert_rel(a: f64, b: f64, tol: f64) {
    assert!(
        (a - b).abs() <= tol * b.abs().max(1e-300),
        "{a} vs {b} (tol {tol})"
    );
}

fn term_sum_identity(r: &ExpansionResult) {
    let sum: f64 = r.terms.iter().map(|t| t.product).sum();
    assert!(
        (r.total - sum).abs() <= 1e-14 * sum.abs().max(1e-300),
        "term sum {sum} vs total {}",
        r.total
    );
}

#[test]
fn angle_fixture_expansion() {
    let c = fixtures::angle(PI / 2.0, 1.0).steiner_coefficients();
    let r = sfh_expansion_2d(&c, 2.5);
    term_sum_identity(&r);
    assert_rel(r.total, 0.019771044135064516, 1e-12);
    assert_rel(r.term("L0").unwrap().product, 5.785483794132936e-3, 1e-12);
    assert_rel(r.term("L1").unwrap().product, 1.3985560340931580e-2, 1e-12);
    assert_eq!(r.term("sigma2").unwrap().product, 0.0);
}

#[test]
fn empty_square_expansion_structure() {
    // ((pi-4)/pi) tail(u) + (4 / sqrt(2 pi)) phi(u); sigma2 = 0.
    let c = fixtures::empty_square().steiner_coefficients();
    let u = 2.0;
    let r = sfh_expansion_2d(&c, u);
    term_sum_identity(&r);
    let (tail, phi) = gaussian_kernels(u);
    assert_rel(
        r.total,
        (PI - 4.0) / PI * tail + 4.0 / (2.0 * PI).sqrt() * phi,
        1e-14,
    );
}

#[test]
fn convex_body_reduces_to_euler_form() {
    // For a convex set the tail coefficient is exactly 1.
    let c = fixtures::disk(1.0).steiner_coefficients();
    let r = sfh_expansion_2d(&c, 3.0);
    assert_rel(r.term("L0").unwrap().coefficient, 1.0, 1e-14);
    term_sum_identity(&r);
}

#[test]
fn cube_expansion_3d() {
    let c = SteinerCoeffs3D {
        l1: 3.0,
        l2: 3.0,
        l3: 1.0,
        provenance: Provenance::Exact,
    };
    let r = expansion_3d(&c, 3.0).unwrap();
    term_sum_identity(&r);
    let (_, phi) = gaussian_kernels(3.0);
    assert_rel(
        r.total,
        3.0 * phi / (2.0 * (2.0 * PI).sqrt())
            + 9.0 * phi / (2.0 * PI)
            + 8.0 * phi / (2.0 * PI).powf(1.5),
        1e-14,
    );
    assert_rel(r.total, 1.1251386160589814e-2, 1e-12);
    assert!(expansion_3d(&c, 0.9).is_err());
}

#[test]
fn box_1x1x2_expansion_uses_coefficients() {
    let p = crate::geometry3d::box_union(&[crate::geometry3d::Box3 {
        min: [0.0, 0.0, 0.0],
        max: [1.0, 1.0, 2.0],
    }])
    .unwrap();
    let c = polytope_coefficients(&p).unwrap();
    assert_rel(c.l1, 4.0, 1e-12);
    assert_rel(c.l2, 5.0, 1e-12);
    assert_rel(c.l3, 2.0, 1e-12);
    let r = expansion_3d(&c, 2.5).unwrap();
    term_sum_identity(&r);
    // Degenerate wireframe: pure edge term.
    let wire = SteinerCoeffs3D {
        l1: 4.0,
        l2: 0.0,
        l3: 0.0,
        provenance: Provenance::Exact,
    };
    let rw = expansion_3d(&wire, 2.5).unwrap();
    assert_rel(rw.total, rw.term("L1").unwrap().product, 1e-14);
}

#[test]
fn joint_exceedance_constants() {
    // n = 2, d = 0, C = pi: everything cancels to u^{-1} phi(u).
    let u = 2.0;
    let (_, phi) = gaussian_kernels(u);
    assert_rel(
        joint_exceedance_asymptotic(PI, 0.0, 2.0, u).unwrap(),
        phi / u,
        1e-13,
    );
    // Perpendicular crossing, C = 4: (4/pi) u^{-1} phi(u).
    assert_rel(
        joint_exceedance_asymptotic(4.0, 0.0, 2.0, u).unwrap(),
        4.0 / PI * phi / u,
        1e-13,
    );
    assert!(joint_exceedance_asymptotic(1.0, 2.0, 2.0, u).is_err());
    assert!(joint_exceedance_asymptotic(0.0, 0.0, 2.0, u).is_err());
}

#[test]
fn tangent_pair_matches_joint_reduction() {
    // The u^{-1/2} phi(u) term of the tangent-pair expansion equals the
    // Joint-exceedance leading term with n = 2, d = 1/2, C = (8/3) sqrt(R).
    for (r, u) in [(1.0, 3.0), (2.5, 2.0), (0.3, 4.0)] {
        let e = tangent_pair_expansion(r, 0.7, 1.3, u).unwrap();
        term_sum_identity(&e);
        let joint = joint_exceedance_asymptotic(8.0 / 3.0 * r.sqrt(), 0.5, 2.0, u).unwrap();
        assert_rel(-e.term("joint").unwrap().product, joint, 1e-12);
    }
    // Frozen coefficient at R = 1.
    let e = tangent_pair_expansion(1.0, 0.0, 0.0, 2.0).unwrap();
    assert_rel(-e.term("joint").unwrap().coefficient, 0.6560038973337529, 1e-12);
    // Doubling both lengths doubles only the phi(u) term.
    let a = tangent_pair_expansion(1.0, 1.0, 2.0, 2.5).unwrap();
    let b = tangent_pair_expansion(1.0, 2.0, 4.0, 2.5).unwrap();
    assert_rel(
        b.term("length").unwrap().product,
        2.0 * a.term("length").unwrap().product,
        1e-14,
    );
    assert_rel(
        b.term("tail").unwrap().product,
        a.term("tail").unwrap().product,
        1e-14,
    );
    assert!(tangent_pair_expansion(0.0, 1.0, 1.0, 2.0).is_err());
}

#[test]
fn euler_density_integrates_to_expansion() {
    // int_u^inf p^E = chi tail(u) + sigma1 phi(u)/(2 sqrt(2 pi))
    // + sigma2 u phi(u)/(2 pi); checked by composite Simpson.
    let (chi, s1, s2) = (1.0, 2.0 * PI, PI);
    let u = 2.0;
    let hi = 14.0;
    let n = 200_000;
    let h = (hi - u) / n as f64;
    let mut s = euler_density_2d(chi, s1, s2, u) + euler_density_2d(chi, s1, s2, hi);
    for i in 1..n {
        s += euler_density_2d(chi, s1, s2, u + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    let integral = s * h / 3.0;
    let (tail, phi) = gaussian_kernels(u);
    let closed = chi * tail + s1 * phi / (2.0 * (2.0 * PI).sqrt()) + s2 * u * phi / (2.0 * PI);
    assert_rel(integral, closed, 1e-8);
    // Plug-in check at x = 3 for the unit disk.
    assert_rel(
        euler_density_2d(1.0, 2.0 * PI, PI, 3.0),
        0.038822736867053496,
        1e-12,
    );
    assert_eq!(euler_density_2d(0.0, 0.0, 0.0, 2.0), 0.0);
}

#[test]
fn density_is_expansion_derivative() {
    // -d/du sfh_expansion_2d(u) = euler_density_2d(u) when L0 = chi and
    // L1 = sigma1 (central differences, u in [1, 5]).
    let c = SteinerCoeffs2D {
        sigma2: 2.0,
        l1: 6.0,
        l0: 1.0,
        provenance: Provenance::Exact,
    };
    let du = 1e-5;
    let mut u = 1.0;
    while u <= 5.0 {
        let deriv = -(sfh_expansion_2d(&c, u + du).total - sfh_expansion_2d(&c, u - du).total)
            / (2.0 * du);
        let dens = euler_density_2d(c.l0, c.l1, c.sigma2, u);
        assert!((deriv - dens).abs() <= 1e-6, "u = {u}: {deriv} vs {dens}");
        u += 0.25;
    }
}

#[test]
fn dominance_ordering() {
    // With positive coefficients the u*phi and phi terms shrink relative to
    // each other like 1/u; ratios against the tail term grow.
    let c = SteinerCoeffs2D {
        sigma2: 1.0,
        l1: 1.0,
        l0: 1.0,
        provenance: Provenance::Exact,
    };
    let mut prev_s2_over_l1 = f64::NEG_INFINITY;
    let mut prev_l1_over_l0 = f64::NEG_INFINITY;
    let mut u = 2.0;
    while u <= 6.0 {
        let r = sfh_expansion_2d(&c, u);
        let s2 = r.term("sigma2").unwrap().product;
        let l1 = r.term("L1").unwrap().product;
        let l0 = r.term("L0").unwrap().product;
        assert!(s2 / l1 > prev_s2_over_l1);
        assert!(l1 / l0 > prev_l1_over_l0);
        prev_s2_over_l1 = s2 / l1;
        prev_l1_over_l0 = l1 / l0;
        u += 0.5;
    }
}

#[test]
fn upper_bound_dominates_expansion() {
    // Convex polygons: the bound is >= the expansion on u in [2, 6]; the
    // sigma2 terms match to leading order as Phi(u/c) -> 1.
    let c_field = 0.5_f64.sqrt();
    let triangle = SteinerCoeffs2D {
        sigma2: 6.0,
        l1: 12.0,
        l0: 1.0,
        provenance: Provenance::Exact,
    };
    for c in [fixtures::unit_square().steiner_coefficients(), triangle] {
        let mut u = 2.0;
        while u <= 6.0 {
            let bound = polygon_upper_bound(c.l1, c.sigma2, c_field, u).unwrap();
            let exp = sfh_expansion_2d(&c, u).total;
            assert!(bound >= exp, "u = {u}: {bound} < {exp}");
            u += 0.25;
        }
    }
    // sigma2 = 0 closed form.
    let (tail, phi) = gaussian_kernels(2.0);
    assert_rel(
        polygon_upper_bound(3.0, 0.0, c_field, 2.0).unwrap(),
        tail + 3.0 * phi / (2.0 * (2.0 * PI).sqrt()),
        1e-14,
    );
    assert!(polygon_upper_bound(1.0, 1.0, 0.0, 2.0).is_err());
}

#[test]
fn dihedral_expansion_terms() {
    // alpha = pi/2, unit squares sharing a unit edge.
    let r = dihedral_expansion(1.0, 1.0, 4.0, 4.0, 1.0, PI / 2.0, 2.5).unwrap();
    term_sum_identity(&r);
    let sub = crate::geometry3d::dihedral_subtraction_constant(PI / 2.0).unwrap();
    assert_rel(sub, 1.0683098861837907, 1e-12);
    let (_, phi) = gaussian_kernels(2.5);
    assert_rel(
        r.term("sigma1").unwrap().product,
        (8.0 - sub) * phi / (2.0 * (2.0 * PI).sqrt()),
        1e-14,
    );
    // No shared edge: plain sum of the two flat expansions.
    let r0 = dihedral_expansion(1.0, 1.0, 4.0, 4.0, 0.0, PI / 2.0, 2.5).unwrap();
    assert_rel(
        r0.term("sigma1").unwrap().product,
        8.0 * phi / (2.0 * (2.0 * PI).sqrt()),
        1e-14,
    );
    // alpha -> pi: subtraction weight tends to 1 per unit length.
    let r1 = dihedral_expansion(0.0, 0.0, 4.0, 4.0, 2.0, PI - 1e-9, 2.5).unwrap();
    assert_rel(
        r1.term("sigma1").unwrap().coefficient,
        (8.0 - 2.0) / (2.0 * (2.0 * PI).sqrt()),
        1e-7,
    );
    assert!(dihedral_expansion(1.0, 1.0, 4.0, 4.0, 1.0, PI, 2.5).is_err());
}
