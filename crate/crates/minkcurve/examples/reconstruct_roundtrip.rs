//! The fundamental theorem in action: prescribe a curvature function, build
//! the curve, measure its curvature again, and report the round-trip error
//! for each curvature type.
//!
//!     cargo run --example reconstruct_roundtrip

use std::f64::consts::PI;

use minkcurve::curvature::{curvatures, CurvatureKind};
use minkcurve::norm_plane::NormProfile;
use minkcurve::reconstruct::curve_from_curvature;
use minkcurve::Vec2;

fn main() -> minkcurve::Result<()> {
    let p3 = NormProfile::lp(3.0)?;
    // the circular/normal conversions need the unit-circle curvature along
    // every visited tangent direction, so those arcs stay inside one
    // quadrant sector; the area/length types sweep multiple quadrants
    let cases = [
        (CurvatureKind::Minkowski, 5.0, 0.4),
        (CurvatureKind::ArcLength, 5.0, 0.4),
        (CurvatureKind::Circular, 0.5, 0.4),
        (CurvatureKind::Normal, 0.35, 0.25),
    ];
    for (kind, length, theta0) in cases {
        let curve = curve_from_curvature(
            move |s| 1.0 + 0.3 * (2.0 * PI * s / length).sin(),
            kind,
            length,
            &p3,
            Vec2::ZERO,
            p3.phi(theta0),
        )?;
        let kp = curvatures(&curve, &p3)?;
        let vals = kp.values(kind);
        let mut sup: f64 = 0.0;
        for i in 0..kp.len() {
            if kp.flagged[i] || !vals[i].is_finite() {
                continue;
            }
            let param = if kind == CurvatureKind::ArcLength {
                kp.s_a[i]
            } else {
                kp.s[i]
            };
            if param > length {
                continue;
            }
            let expect = 1.0 + 0.3 * (2.0 * PI * param / length).sin();
            sup = sup.max((vals[i] - expect).abs());
        }
        println!("{kind:?}: round-trip sup error {sup:.3e} over length {length}");
    }
    Ok(())
}
