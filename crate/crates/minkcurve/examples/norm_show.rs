//! Inspect a norm: unit circle and anti-circle geometry, lengths, areas, and
//! the Radon test. Writes an SVG with both circles.
//!
//!     cargo run --example norm_show

use minkcurve::curve::PlaneCurve;
use minkcurve::norm_plane::NormProfile;
use minkcurve::plot::{Layer, SvgPlot};

fn main() -> minkcurve::Result<()> {
    let out_dir = std::path::Path::new("target/example-output");
    std::fs::create_dir_all(out_dir)?;

    for (name, profile) in [
        ("euclidean", NormProfile::euclidean()),
        ("lp3", NormProfile::lp(3.0)?),
        ("lp4", NormProfile::lp(4.0)?),
    ] {
        let radon = profile.is_radon(1e-6);
        println!("norm {name}:");
        println!("  circle length (in the norm)   {:.9}", profile.circle_length());
        println!("  twice the unit-ball area      {:.9}", profile.ball_area_x2());
        println!(
            "  radon: {} (deviation {:.3e}, optimal scale {:.6})",
            radon.radon, radon.deviation, radon.scale
        );

        let circle = PlaneCurve::unit_circle(&profile).sample_points(1024);
        let anti = PlaneCurve::anti_circle(&profile)?.sample_points(1024);
        let mut plot = SvgPlot::new();
        plot.add(Layer::path(circle, true, "black"));
        plot.add(Layer::path(anti, true, "crimson"));
        let path = out_dir.join(format!("norm_{name}.svg"));
        std::fs::write(&path, plot.render())?;
        println!("  wrote {}", path.display());
    }
    Ok(())
}
