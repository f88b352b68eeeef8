//! Involutes and left parallels: the involute/evolute inversion, the string
//! length as curvature radius, and the parallels whose singular points trace
//! the evolute.
//!
//!     cargo run --example involutes_parallels

use minkcurve::curvature::curvature_at;
use minkcurve::curve::{ParamTarget, PlaneCurve};
use minkcurve::evolute::{evolute, involute, left_parallel};
use minkcurve::norm_plane::NormProfile;
use minkcurve::plot::{Layer, SvgPlot};

fn main() -> minkcurve::Result<()> {
    let p3 = NormProfile::lp(3.0)?;
    let (circle, _) =
        PlaneCurve::unit_circle(&p3).reparametrize(&p3, ParamTarget::NormArclength)?;

    // involute: string length c, curvature radius c - s
    let c = 7.0;
    let inv = involute(&circle, &p3, c)?;
    println!("involute of the unit l_3 circle with string length {c}:");
    for &s in &[0.5, 1.0, 2.0, 4.0] {
        let k = curvature_at(&inv, &p3, s)?;
        if !k.flagged {
            println!("  s = {s}: curvature radius {:.6} (string leftover {:.6})", 1.0 / k.k_c, c - s);
        }
    }

    // evolute of the involute reproduces the base curve. The l_3 circle's
    // involute has cusps where the base curve crosses a flat direction, so
    // the round trip is demonstrated on the Euclidean circle, which stays
    // regular throughout.
    let e = NormProfile::euclidean();
    let (ecircle, _) = PlaneCurve::circle(1.0).reparametrize(&e, ParamTarget::NormArclength)?;
    let einv = involute(&ecircle, &e, 7.0)?;
    let (inv_unit, table) = einv.reparametrize(&e, ParamTarget::NormArclength)?;
    let ev = evolute(&inv_unit, &e)?;
    let mut worst: f64 = 0.0;
    for (i, &s) in ev.s.iter().enumerate() {
        let s_orig = table.inverse(minkcurve::tables::Column::Norm, s);
        worst = worst.max((ev.points[i] - ecircle.eval(s_orig)).norm_e());
    }
    println!("  evolute of the euclidean circle involute vs the circle: sup distance {worst:.3e}");

    // parallels of the ellipse, with singular samples marked
    let (ellipse, _) =
        PlaneCurve::ellipse(2.0, 1.0).reparametrize(&p3, ParamTarget::NormArclength)?;
    let mut plot = SvgPlot::new();
    plot.add(Layer::path(ellipse.sample_points(1024), true, "black"));
    for (d, color) in [(0.4, "seagreen"), (-0.6, "crimson"), (-1.2, "royalblue")] {
        let (par, singular) = left_parallel(&ellipse, &p3, d)?;
        println!("left parallel at d = {d}: {} singular samples", singular.len());
        plot.add(Layer::path(par.sample_points(1024), true, color));
        let marks: Vec<_> = singular.iter().map(|&s| par.eval(s)).collect();
        plot.add(Layer::crosses(marks, color));
    }
    let out_dir = std::path::Path::new("target/example-output");
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("parallels_lp3.svg");
    std::fs::write(&path, plot.render())?;
    println!("wrote {}", path.display());
    Ok(())
}
