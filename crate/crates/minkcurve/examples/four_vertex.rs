//! Four-vertex counts: every curvature type of every curve in a seeded
//! random convex family has at least four local extrema, in three different
//! normed planes.
//!
//!     cargo run --example four_vertex

use minkcurve::analysis::{four_vertex_report, random_convex_family};
use minkcurve::curvature::CurvatureKind;
use minkcurve::norm_plane::NormProfile;

fn main() -> minkcurve::Result<()> {
    let profiles = [
        ("euclidean", NormProfile::euclidean()),
        ("lp3", NormProfile::lp(3.0)?),
        ("lp4", NormProfile::lp(4.0)?),
    ];
    let family = random_convex_family(6, 0x6D69_6E6B);
    for (name, profile) in &profiles {
        println!("plane {name}:");
        for (ci, curve) in family.iter().enumerate() {
            print!("  curve {ci}:");
            for kind in CurvatureKind::ALL_MINKOWSKIAN {
                let rep = four_vertex_report(curve, profile, kind)?;
                print!(" {}={}", kind.label(), rep.extrema_count);
            }
            let pairs = four_vertex_report(curve, profile, CurvatureKind::Euclidean)?;
            println!(
                "  (equal-curvature opposite pairs: {}{})",
                pairs.equal_pairs.len(),
                if pairs.all_pairs_equal { ", symmetric: all pairs" } else { "" }
            );
        }
    }
    Ok(())
}
