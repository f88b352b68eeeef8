//! Frenet machinery adapted to a norm: frame invariants at a few points and
//! the residual decay of the two Frenet relations under grid refinement.
//!
//!     cargo run --example frenet_frame

use minkcurve::curvature::{frenet_frame, frenet_residuals};
use minkcurve::curve::{ParamTarget, PlaneCurve};
use minkcurve::norm_plane::NormProfile;

fn main() -> minkcurve::Result<()> {
    let p3 = NormProfile::lp(3.0)?;
    let ellipse = PlaneCurve::ellipse(2.0, 1.0);
    let (unit, _) = ellipse.reparametrize(&p3, ParamTarget::NormArclength)?;

    println!("frame samples (tangent unit in the norm, normal unit in the anti-norm):");
    let frames = frenet_frame(&unit.clone().with_samples_n(8), &p3)?;
    for f in &frames {
        println!(
            "  s = {:>7.4}  tangent ({:+.4}, {:+.4})  right normal ({:+.4}, {:+.4})  [t,n] = {:.12}",
            f.s,
            f.tangent.x,
            f.tangent.y,
            f.right_normal.x,
            f.right_normal.y,
            p3.det_form(f.tangent, f.right_normal)
        );
    }

    println!("\nresidual decay of the Frenet relations:");
    println!("{:>8} {:>12} {:>12}", "grid", "r1", "r2");
    for grid in [256usize, 512, 1024, 2048, 4096] {
        let (unit, _) = ellipse
            .clone()
            .with_samples_n(grid)
            .reparametrize(&p3, ParamTarget::NormArclength)?;
        let (r1, r2) = frenet_residuals(&unit, &p3)?;
        println!("{:>8} {:>12.3e} {:>12.3e}", grid, r1, r2);
    }
    Ok(())
}
