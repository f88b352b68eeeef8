//! Extremal osculating circles and anti-circles: the region bounded by a
//! convex curve contains its smallest circle of curvature and is contained
//! in its largest, and the same holds for anti-circles.
//!
//!     cargo run --example inclusion

use minkcurve::analysis::{inclusion_check, support_comparison};
use minkcurve::curve::PlaneCurve;
use minkcurve::norm_plane::NormProfile;

fn main() -> minkcurve::Result<()> {
    let p3 = NormProfile::lp(3.0)?;
    let ellipse = PlaneCurve::ellipse(2.0, 1.0);
    let rep = inclusion_check(&ellipse, &p3)?;
    println!("ellipse 2x1 in the l_3 plane, containment margins (>= 0 means contained):");
    println!("  smallest osculating circle inside the curve:   {:+.6e}", rep.smallest_circle_inside);
    println!("  curve inside the largest osculating circle:    {:+.6e}", rep.largest_circle_outside);
    println!("  smallest osculating anti-circle inside:        {:+.6e}", rep.smallest_anti_circle_inside);
    println!("  curve inside the largest osculating anti-circle: {:+.6e}", rep.largest_anti_circle_outside);

    // plain support-dominance comparison
    let big = PlaneCurve::circle(2.0);
    let small = PlaneCurve::circle(1.0);
    let cmp = support_comparison(&big, &small, &p3, 1e-9)?;
    println!(
        "\nconcentric circles r=2 vs r=1: contains = {}, margin = {:.6}",
        cmp.contains, cmp.margin
    );
    Ok(())
}
