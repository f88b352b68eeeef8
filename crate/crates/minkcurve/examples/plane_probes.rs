//! Plane classification probes: Radon planes are the ones where normal and
//! circular curvature coincide; the Euclidean plane is the one where the
//! Minkowski curvature of the unit circle is constant (equivalently matches
//! the normal curvature).
//!
//!     cargo run --example plane_probes

use minkcurve::analysis::plane_probes;
use minkcurve::norm_plane::NormProfile;

fn main() -> minkcurve::Result<()> {
    let profiles = [
        ("euclidean", NormProfile::euclidean()),
        ("lp(2.5)", NormProfile::lp(2.5)?),
        ("lp(3)", NormProfile::lp(3.0)?),
        ("lp(4)", NormProfile::lp(4.0)?),
        (
            "custom 1+0.08cos(2t)",
            NormProfile::from_polar_fn(
                |th| 1.0 + 0.08 * (2.0 * th).cos(),
                |th| -0.16 * (2.0 * th).sin(),
                |th| -0.32 * (2.0 * th).cos(),
            )?,
        ),
    ];
    println!(
        "{:<22} {:>12} {:>14} {:>14} {:>14}",
        "plane", "radon dev", "|k_n-k_c| on S", "|k_m-k_n| on S", "var(k_m) on S"
    );
    for (name, profile) in profiles {
        let p = plane_probes(&profile)?;
        println!(
            "{:<22} {:>12.3e} {:>14.3e} {:>14.3e} {:>14.3e}",
            name,
            p.radon_deviation,
            p.normal_vs_circular_on_circle,
            p.minkowski_vs_normal_on_circle,
            p.minkowski_variance_on_circle
        );
    }
    println!("\nzero rows characterize the Euclidean plane; a zero first column, Radon planes.");
    Ok(())
}
