//! File formats: JSON schemas for norms and curves, CSV import/export.
//! All numeric output uses 17 significant digits so identical inputs give
//! byte-identical files.

use serde::{Deserialize, Serialize};

use crate::curvature::CurvatureProfile;
use crate::curve::PlaneCurve;
use crate::error::{Error, Result};
use crate::geom::Vec2;

/// JSON schema for curves: a point polygon plus the closed flag.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveSpec {
    pub closed: bool,
    pub points: Vec<[f64; 2]>,
}

impl CurveSpec {
    pub fn from_curve(curve: &PlaneCurve, n: usize) -> CurveSpec {
        CurveSpec {
            closed: curve.closed(),
            points: curve
                .sample_points(n)
                .into_iter()
                .map(|p| [p.x, p.y])
                .collect(),
        }
    }

    pub fn to_curve(&self) -> Result<PlaneCurve> {
        let pts: Vec<Vec2> = self.points.iter().map(|p| Vec2::new(p[0], p[1])).collect();
        PlaneCurve::from_points(&pts, self.closed)
    }
}

/// Full-precision float formatting (17 significant digits).
pub fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        "NaN".to_string()
    } else {
        format!("{v:.16e}")
    }
}

/// CSV of a curvature profile: `s,k_e,k_m,k_n,k_c,k_l` with a header line.
pub fn curvature_csv(profile: &CurvatureProfile) -> String {
    let mut out = String::from("s,k_e,k_m,k_n,k_c,k_l\n");
    for i in 0..profile.len() {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            fmt_f64(profile.s[i]),
            fmt_f64(profile.k_e[i]),
            fmt_f64(profile.k_m[i]),
            fmt_f64(profile.k_n[i]),
            fmt_f64(profile.k_c[i]),
            fmt_f64(profile.k_l[i]),
        ));
    }
    out
}

/// CSV of a point list: `x,y` rows, no header.
pub fn points_csv(points: &[Vec2]) -> String {
    let mut out = String::new();
    for p in points {
        out.push_str(&format!("{},{}\n", fmt_f64(p.x), fmt_f64(p.y)));
    }
    out
}

/// Reads a two-column CSV (optionally with a non-numeric header row).
pub fn read_two_column_csv(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut cols = line.split(',');
        let a = cols.next().unwrap_or("").trim();
        let b = cols.next().unwrap_or("").trim();
        match (a.parse::<f64>(), b.parse::<f64>()) {
            (Ok(x), Ok(y)) => out.push((x, y)),
            _ if lineno == 0 => continue, // header
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected two numeric columns, got '{line}'",
                    lineno + 1
                )))
            }
        }
    }
    if out.len() < 2 {
        return Err(Error::Parse("need at least two data rows".into()));
    }
    Ok(out)
}

/// Curve from a two-column x,y CSV.
pub fn curve_from_csv(text: &str, closed: bool) -> Result<PlaneCurve> {
    let pts: Vec<Vec2> = read_two_column_csv(text)?
        .into_iter()
        .map(|(x, y)| Vec2::new(x, y))
        .collect();
    PlaneCurve::from_points(&pts, closed)
}

/// Sampled curvature function from a two-column (s, k) CSV, interpolated
/// monotonically in s.
pub fn curvature_fn_from_csv(text: &str) -> Result<(impl Fn(f64) -> f64 + Send + Sync, f64)> {
    let rows = read_two_column_csv(text)?;
    let (s, k): (Vec<f64>, Vec<f64>) = rows.into_iter().unzip();
    if s.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Parse("s column must be strictly increasing".into()));
    }
    let total = *s.last().unwrap();
    let interp = crate::interp::MonotoneCubic::fritsch_carlson(s, k);
    Ok((move |x: f64| interp.eval(x), total))
}
