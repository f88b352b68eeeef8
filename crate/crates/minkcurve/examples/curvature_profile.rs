//! The four curvature types of an ellipse in the l_3 plane, exported as CSV,
//! with the sign/ordering structure printed for a few samples.
//!
//!     cargo run --example curvature_profile

use minkcurve::curvature::curvatures;
use minkcurve::curve::PlaneCurve;
use minkcurve::io::curvature_csv;
use minkcurve::norm_plane::NormProfile;

fn main() -> minkcurve::Result<()> {
    let p3 = NormProfile::lp(3.0)?;
    let ellipse = PlaneCurve::ellipse(2.0, 1.0);
    let kp = curvatures(&ellipse, &p3)?;

    println!("sample of the curvature arrays (ellipse 2x1 in the l_3 norm):");
    println!("{:>10} {:>10} {:>10} {:>10} {:>10} {:>10}", "s", "k_e", "k_m", "k_n", "k_c", "k_l");
    for i in (0..kp.len()).step_by(kp.len() / 12) {
        println!(
            "{:>10.4} {:>10.5} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
            kp.s[i], kp.k_e[i], kp.k_m[i], kp.k_n[i], kp.k_c[i], kp.k_l[i]
        );
    }
    println!("flat-guard flagged samples: {}", kp.flagged_count());

    let out_dir = std::path::Path::new("target/example-output");
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("ellipse_lp3_curvatures.csv");
    std::fs::write(&path, curvature_csv(&kp))?;
    println!("wrote {}", path.display());
    Ok(())
}
