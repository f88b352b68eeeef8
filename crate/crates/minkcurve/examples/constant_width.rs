//! Constant-width diagnostics: a smooth constant-width curve built from an
//! odd support harmonic, the opposite-radii identity, the perimeter
//! identity, and the equal-halving test separating circles from other
//! constant-width curves.
//!
//!     cargo run --example constant_width

use minkcurve::analysis::{constant_width_checks, width_function};
use minkcurve::curve::PlaneCurve;
use minkcurve::norm_plane::NormProfile;
use minkcurve::plot::{Layer, SvgPlot};

fn main() -> minkcurve::Result<()> {
    let e = NormProfile::euclidean();
    let rounded_triangle =
        PlaneCurve::from_support_harmonics(1.0, &[(0.0, 0.0), (0.0, 0.0), (0.1, 0.0)])?;

    let widths = width_function(&rounded_triangle, &e, 256)?;
    println!(
        "support h = 1 + 0.1 cos(3t): width in [{:.9}, {:.9}] (spread {:.2e})",
        widths.min, widths.max, widths.relative_spread
    );

    let rep = constant_width_checks(&rounded_triangle, &e, 2.0, 1e-6)?;
    println!("  opposite curvature radii sum to the width: deviation {:.3e}", rep.radii_sum_deviation);
    println!("  perimeter vs d*l(S)/2: deviation {:.3e}", rep.length_identity_deviation);
    println!("  halving imbalance {:.3e} (nonzero: not a circle)", rep.halving_imbalance);

    let circle_rep = constant_width_checks(&PlaneCurve::circle(1.0), &e, 2.0, 1e-6)?;
    println!("  circle halving imbalance {:.3e} (zero: a circle)", circle_rep.halving_imbalance);

    // the ellipse is not constant width
    let ell = width_function(&PlaneCurve::ellipse(2.0, 1.0), &e, 256)?;
    println!(
        "ellipse 2x1: width in [{:.4}, {:.4}] — not constant",
        ell.min, ell.max
    );

    let mut plot = SvgPlot::new();
    plot.add(Layer::path(rounded_triangle.sample_points(1024), true, "black"));
    let out_dir = std::path::Path::new("target/example-output");
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("constant_width.svg");
    std::fs::write(&path, plot.render())?;
    println!("wrote {}", path.display());
    Ok(())
}
