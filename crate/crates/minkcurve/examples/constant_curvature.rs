//! The classified curves of constant curvature: circles (circular type),
//! anti-circles (normal type), and the centroid-curve homothets (Minkowski
//! and arc-length types). Each one is rebuilt and its curvature verified.
//!
//!     cargo run --example constant_curvature

use minkcurve::curvature::{curvatures, CurvatureKind};
use minkcurve::norm_plane::NormProfile;
use minkcurve::plot::{Layer, SvgPlot};
use minkcurve::reconstruct::constant_curvature_curve;

fn main() -> minkcurve::Result<()> {
    let p3 = NormProfile::lp(3.0)?;
    let out_dir = std::path::Path::new("target/example-output");
    std::fs::create_dir_all(out_dir)?;

    let mut plot = SvgPlot::new();
    let colors = ["black", "crimson", "royalblue", "seagreen"];
    for (i, kind) in CurvatureKind::ALL_MINKOWSKIAN.iter().enumerate() {
        let curve = constant_curvature_curve(*kind, 1.0, &p3)?;
        let kp = curvatures(&curve, &p3)?;
        let dev = kp.max_deviation_from(*kind, 1.0);
        println!("constant {kind:?} = 1 in the l_3 plane: measured deviation {dev:.3e}");
        plot.add(Layer::path(curve.sample_points(1024), true, colors[i]));
    }
    let path = out_dir.join("constant_curvature_lp3.svg");
    std::fs::write(&path, plot.render())?;
    println!("wrote {} (circle, anti-circle, two centroid-curve homothets)", path.display());
    Ok(())
}
