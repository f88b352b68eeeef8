//! Evolute of the conjugate-exponent circle in the l_3 plane: the curve,
//! its evolute and the cusps, written as a layered SVG. This reproduces the
//! star-shaped locus of curvature centers of the l_{3/2} circle.
//!
//!     cargo run --example evolute_figure

use minkcurve::curve::{ParamTarget, PlaneCurve};
use minkcurve::evolute::{evolute, signed_evolute_length, vertices};
use minkcurve::norm_plane::NormProfile;
use minkcurve::plot::{Layer, SvgPlot};
use minkcurve::Vec2;

fn main() -> minkcurve::Result<()> {
    let p3 = NormProfile::lp(3.0)?;
    let curve = PlaneCurve::anti_circle(&p3)?; // the l_{3/2} circle
    let (unit, _) = curve.reparametrize(&p3, ParamTarget::NormArclength)?;
    let ev = evolute(&unit, &p3)?;

    println!("evolute of the l_(3/2) circle in the l_3 norm:");
    println!("  {} sample points, {} cusps", ev.points.len(), ev.cusps.len());
    let lengths = signed_evolute_length(&unit, &p3)?;
    println!(
        "  signed length {:.3e} (telescopes to zero), unsigned length {:.6}",
        lengths.signed, lengths.unsigned
    );
    match vertices(&unit, &p3) {
        Ok(rep) if !rep.degenerate_continuum => {
            println!("  vertices of the circular curvature: {}", rep.vertices.len())
        }
        _ => println!("  circular curvature constant (degenerate vertex continuum)"),
    }

    let cusp_points: Vec<Vec2> = ev
        .cusps
        .iter()
        .map(|&s| {
            let i = ev.s.iter().position(|&x| x >= s).unwrap_or(ev.s.len() - 1);
            ev.points[i]
        })
        .collect();
    let mut plot = SvgPlot::new();
    plot.add(Layer::path(unit.sample_points(1024), true, "black"));
    plot.add(Layer::path(ev.points.clone(), false, "crimson"));
    plot.add(Layer::crosses(cusp_points, "royalblue"));

    let out_dir = std::path::Path::new("target/example-output");
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("evolute_lq_circle_lp3.svg");
    std::fs::write(&path, plot.render())?;
    println!("wrote {}", path.display());
    Ok(())
}
