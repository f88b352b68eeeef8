//! The duality pairs across the anti-norm: circular curvature equals normal
//! curvature computed in the anti-norm, and arc-length curvature equals the
//! Minkowski curvature there; plus Birkhoff reversal and the double dual.
//!
//!     cargo run --example duality

use std::f64::consts::PI;

use minkcurve::curvature::duality_check;
use minkcurve::curve::PlaneCurve;
use minkcurve::norm_plane::NormProfile;
use minkcurve::Vec2;

fn main() -> minkcurve::Result<()> {
    let p3 = NormProfile::lp(3.0)?;
    let anti = p3.anti_as_norm_profile(1e-7)?;

    println!("anti-norm of the l_3 norm is the conjugate l_(3/2) norm:");
    let v = Vec2::new(1.0, 1.0);
    println!(
        "  ||(1,1)||_a = {:.9} (conjugate closed form {:.9})",
        p3.anti_norm_eval(v),
        2.0f64.powf(2.0 / 3.0)
    );

    println!("\nduality of the curvature types on curves in the l_3 plane:");
    for (name, curve) in [
        ("ellipse 2x1", PlaneCurve::ellipse(2.0, 1.0)),
        ("circle", PlaneCurve::circle(1.0)),
    ] {
        let rep = duality_check(&curve, &p3, 1e-7)?;
        println!(
            "  {name}: max |k_c - k_n(anti)| = {:.3e}, max |k_l - k_m(anti)| = {:.3e}",
            rep.circular_vs_anti_normal, rep.arclength_vs_anti_minkowski
        );
    }

    println!("\nBirkhoff orthogonality reverses through the anti-norm:");
    let mut reversed = 0;
    for i in 0..64 {
        let th = 0.017 + 2.0 * PI * i as f64 / 64.0;
        let x = p3.phi(th);
        let y = p3.dphi(th);
        if p3.birkhoff_orthogonal(x, y, 1e-8)? && anti.birkhoff_orthogonal(y, x, 1e-4)? {
            reversed += 1;
        }
    }
    println!("  verified x -| y and y -|_a x at {reversed}/64 circle points");

    println!("\nthe anti-norm of the anti-norm is the original norm:");
    let mut worst: f64 = 0.0;
    for i in 0..128 {
        let dir = Vec2::from_angle(2.0 * PI * i as f64 / 128.0) * 1.7;
        worst = worst.max((anti.anti_norm_eval(dir) - p3.norm_eval(dir)).abs());
    }
    println!("  max deviation on a grid: {worst:.3e}");
    Ok(())
}
