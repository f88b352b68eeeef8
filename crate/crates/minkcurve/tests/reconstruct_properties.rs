//! Fundamental-theorem properties beyond the acceptance criteria: the
//! measured-curvature round trip of a real curve, constant-curvature
//! classification for the normal type, and the concurrence probes.

use std::f64::consts::PI;

use minkcurve::curvature::{curvatures, CurvatureKind};
use minkcurve::curve::{ParamTarget, PlaneCurve};
use minkcurve::interp::MonotoneCubic;
use minkcurve::norm_plane::NormProfile;
use minkcurve::reconstruct::{
    constant_curvature_curve, curve_from_curvature, normal_concurrence_test, NormalSide,
};
use minkcurve::Vec2;

#[test]
fn minkowski_roundtrip_reproduces_the_ellipse() {
    // measure k_m of the ellipse, feed it back, compare pointwise: the
    // reconstruction starts from the matching initial data so the curves
    // coincide without any registration
    let p3 = NormProfile::lp(3.0).unwrap();
    let (unit, _) = PlaneCurve::ellipse(2.0, 1.0)
        .reparametrize(&p3, ParamTarget::NormArclength)
        .unwrap();
    let kp = curvatures(&unit, &p3).unwrap();
    let interp = MonotoneCubic::fritsch_carlson(kp.s.clone(), kp.k_m.clone());
    let length = *kp.s.last().unwrap();
    let start = unit.eval(0.0);
    let dir = unit.deriv1(0.0);
    let rebuilt = curve_from_curvature(
        move |s| interp.eval(s),
        CurvatureKind::Minkowski,
        length,
        &p3,
        start,
        dir,
    )
    .unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..=256 {
        let s = length * i as f64 / 256.0;
        worst = worst.max((rebuilt.eval(s) - unit.eval(s)).norm_e());
    }
    assert!(worst < 1e-4, "pointwise reconstruction error {worst}");
}

#[test]
fn constant_normal_curvature_gives_the_anti_circle() {
    let p3 = NormProfile::lp(3.0).unwrap();
    for value in [1.0, 2.0] {
        let curve = constant_curvature_curve(CurvatureKind::Normal, value, &p3).unwrap();
        let kp = curvatures(&curve, &p3).unwrap();
        let dev = kp.max_deviation_from(CurvatureKind::Normal, value);
        assert!(dev < 1e-6, "k_n deviates by {dev} for value {value}");
    }
}

#[test]
fn constant_arclength_curvature_curve_has_constant_k_l() {
    let p3 = NormProfile::lp(3.0).unwrap();
    let curve = constant_curvature_curve(CurvatureKind::ArcLength, 1.0, &p3).unwrap();
    let kp = curvatures(&curve, &p3).unwrap();
    let dev = kp.max_deviation_from(CurvatureKind::ArcLength, 1.0);
    assert!(dev < 1e-4, "k_l deviates by {dev}");
}

#[test]
fn constant_minkowski_curve_closes_and_has_constant_k_m() {
    let p3 = NormProfile::lp(3.0).unwrap();
    let curve = constant_curvature_curve(CurvatureKind::Minkowski, 1.0, &p3).unwrap();
    let kp = curvatures(&curve, &p3).unwrap();
    let dev = kp.max_deviation_from(CurvatureKind::Minkowski, 1.0);
    assert!(dev < 1e-4, "k_m deviates by {dev}");
    // homothety convention: value 2 halves the curve
    let half = constant_curvature_curve(CurvatureKind::Minkowski, 2.0, &p3).unwrap();
    for i in 0..16 {
        let t = 2.0 * PI * i as f64 / 16.0;
        assert!((half.eval(t) * 2.0 - curve.eval(t)).norm_e() < 1e-9);
    }
}

#[test]
fn reconstruction_in_all_types_matches_euclidean_closed_form() {
    // k = 1/R constant must give a radius-R circular arc for every type
    let e = NormProfile::euclidean();
    for kind in CurvatureKind::ALL_MINKOWSKIAN {
        let r = 1.7;
        let curve = curve_from_curvature(
            move |_| 1.0 / r,
            kind,
            2.0,
            &e,
            Vec2::new(r, 0.0),
            Vec2::new(0.0, 1.0),
        )
        .unwrap();
        for i in 0..=32 {
            let s = 2.0 * i as f64 / 32.0;
            let expect = Vec2::new(r * (s / r).cos(), r * (s / r).sin());
            assert!(
                (curve.eval(s) - expect).norm_e() < 1e-9,
                "{kind:?} deviates at s={s}"
            );
        }
    }
}

#[test]
fn concurrence_residuals_classify_circle_vs_anti_circle() {
    let p3 = NormProfile::lp(3.0).unwrap();
    // an arc of a shifted Minkowski circle: left-normals meet at its center
    let center = Vec2::new(0.7, -0.3);
    let radius = 1.4;
    let p3c = p3.clone();
    let p3d = p3.clone();
    let p3e = p3.clone();
    let arc = PlaneCurve::from_fn(
        move |t| center + radius * p3c.phi(t),
        move |t| radius * p3d.dphi(t),
        move |t| radius * p3e.d2phi(t),
        (0.3, 1.7),
        false,
    );
    let left = normal_concurrence_test(&arc, &p3, NormalSide::Left).unwrap();
    assert!(left.max_residual < 1e-6, "left residual {}", left.max_residual);
    assert!((left.point - center).norm_e() < 1e-6);
    // and its right-normals do NOT meet (the plane is not Radon)
    let right = normal_concurrence_test(&arc, &p3, NormalSide::Right).unwrap();
    assert!(right.max_residual > 1e-3, "right residual {}", right.max_residual);
}

#[test]
fn flat_start_direction_is_rejected_for_circular_type() {
    let p3 = NormProfile::lp(3.0).unwrap();
    let res = curve_from_curvature(
        |_| 1.0,
        CurvatureKind::Circular,
        1.0,
        &p3,
        Vec2::ZERO,
        p3.phi(0.0), // tangent at a flat direction of the l_3 circle
    );
    assert!(res.is_err());
}

#[test]
fn bad_start_direction_is_rejected() {
    let p3 = NormProfile::lp(3.0).unwrap();
    let res = curve_from_curvature(
        |_| 1.0,
        CurvatureKind::Minkowski,
        1.0,
        &p3,
        Vec2::ZERO,
        Vec2::new(2.0, 0.0), // not unit in the norm
    );
    assert!(res.is_err());
}
