//! Theorem-level analyses of closed convex curves: four-vertex counting,
//! width and constant-width diagnostics, osculating-circle containment, and
//! plane-classification probes.

use std::f64::consts::PI;

use serde::Serialize;

use crate::curvature::{curvature_at, curvatures, CurvatureKind};
use crate::curve::{Metric, PlaneCurve};
use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::norm_plane::NormProfile;
use crate::numerics::{bisect, golden_min, SplitMix64};
use crate::tables::{Column, ParamTable};

/// Support-function access to a closed strictly convex curve through its
/// tangent-angle table.
pub struct SupportFn<'a> {
    curve: &'a PlaneCurve,
    table: ParamTable,
    theta0: f64,
}

impl<'a> SupportFn<'a> {
    pub fn new(curve: &'a PlaneCurve, profile: &NormProfile) -> Result<SupportFn<'a>> {
        if !curve.closed() {
            return Err(Error::NotConvex("support function needs a closed curve".into()));
        }
        let table = curve.param_table(profile)?;
        if !table.has_tangent_column() {
            return Err(Error::NotConvex(
                "tangent angle is not strictly monotone on this curve".into(),
            ));
        }
        let theta0 = table.theta_tan[0];
        Ok(SupportFn {
            curve,
            table,
            theta0,
        })
    }

    /// Curve parameter of the point whose tangent direction is `beta`.
    pub fn param_at_tangent(&self, beta: f64) -> f64 {
        let reduced = (beta - self.theta0).rem_euclid(2.0 * PI) + self.theta0;
        self.table.inverse(Column::TangentAngle, reduced)
    }

    /// Euclidean support function: signed distance of the supporting line
    /// with outward normal `(cos alpha, sin alpha)` from the origin.
    pub fn eval(&self, alpha: f64) -> f64 {
        let t = self.param_at_tangent(alpha + 0.5 * PI);
        self.curve.eval(t).dot(Vec2::from_angle(alpha))
    }

    pub fn table(&self) -> &ParamTable {
        &self.table
    }
}

/// Minkowski distance between the two parallel supporting lines of the curve
/// with Euclidean normal direction `alpha`: the literal minimum of
/// `||x - y||` over the two lines, found by 1-D minimization.
pub fn width_at(
    support: &SupportFn<'_>,
    profile: &NormProfile,
    alpha: f64,
) -> f64 {
    let strip = support.eval(alpha) + support.eval(alpha + PI);
    let n = Vec2::from_angle(alpha);
    let t_dir = n.perp();
    // bracket: the minimizing offset is bounded by the norm's eccentricity
    let bracket = 4.0 * strip.abs().max(1e-12) * profile.kphi_max().max(1.0);
    let (_, w) = golden_min(
        |t| profile.norm_eval(strip * n + t * t_dir),
        -bracket,
        bracket,
        1e-12 * strip.abs().max(1.0),
    );
    w
}

/// Width of a convex curve over a grid of directions.
#[derive(Debug, Clone, Serialize)]
pub struct WidthReport {
    pub alphas: Vec<f64>,
    pub widths: Vec<f64>,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    /// `(max - min) / mean`.
    pub relative_spread: f64,
}

impl WidthReport {
    pub fn is_constant(&self, tol: f64) -> bool {
        self.relative_spread < tol
    }
}

/// Samples the width function on `n_dirs` directions over `[0, pi)` (widths
/// repeat with period pi).
pub fn width_function(
    curve: &PlaneCurve,
    profile: &NormProfile,
    n_dirs: usize,
) -> Result<WidthReport> {
    let support = SupportFn::new(curve, profile)?;
    let mut alphas = Vec::with_capacity(n_dirs);
    let mut widths = Vec::with_capacity(n_dirs);
    for i in 0..n_dirs {
        let alpha = PI * i as f64 / n_dirs as f64;
        alphas.push(alpha);
        widths.push(width_at(&support, profile, alpha));
    }
    let min = widths.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = widths.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mean = widths.iter().sum::<f64>() / widths.len() as f64;
    Ok(WidthReport {
        alphas,
        widths,
        min,
        max,
        mean,
        relative_spread: (max - min) / mean,
    })
}

/// Constant-width diagnostics: opposite curvature radii sum
/// to the width, the perimeter is `d l(S) / 2`, and equal halving by every
/// opposite pair characterizes the circle.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantWidthReport {
    pub width: f64,
    /// Max deviation of `rho(u) + rho(opposite(u))` from the width.
    pub radii_sum_deviation: f64,
    /// `| l(gamma) - d l(S)/2 |`.
    pub length_identity_deviation: f64,
    /// Max over opposite pairs of the difference of the two arc lengths.
    pub halving_imbalance: f64,
    /// Relative spread of the circular curvature (zero for circles).
    pub circular_curvature_spread: f64,
}

pub fn constant_width_checks(
    curve: &PlaneCurve,
    profile: &NormProfile,
    d: f64,
    width_tol: f64,
) -> Result<ConstantWidthReport> {
    let widths = width_function(curve, profile, 256)?;
    if !widths.is_constant(width_tol) {
        return Err(Error::NotConstantWidth(widths.relative_spread));
    }
    let support = SupportFn::new(curve, profile)?;
    let total_s = support.table().total(Column::Norm);

    let mut radii_dev: f64 = 0.0;
    let mut halving: f64 = 0.0;
    let n = 512;
    let beta0 = support.table().theta_tan[0];
    for i in 0..n {
        let beta = beta0 + PI * i as f64 / n as f64;
        let t1 = support.param_at_tangent(beta);
        let t2 = support.param_at_tangent(beta + PI);
        let k1 = curvature_at(curve, profile, t1)?;
        let k2 = curvature_at(curve, profile, t2)?;
        if !k1.flagged && !k2.flagged {
            let sum = 1.0 / k1.k_c + 1.0 / k2.k_c;
            radii_dev = radii_dev.max((sum - d).abs());
        }
        let s1 = support.table().forward(Column::Norm, t1);
        let s2 = support.table().forward(Column::Norm, t2);
        let arc = (s2 - s1).rem_euclid(total_s);
        halving = halving.max((arc - (total_s - arc)).abs());
    }

    let len = curve.length(profile, Metric::Norm);
    let length_dev = (len - d * profile.circle_length() / 2.0).abs();

    let kp = curvatures(curve, profile)?;
    let mut kc_min = f64::INFINITY;
    let mut kc_max = f64::NEG_INFINITY;
    for i in 0..kp.len() {
        if !kp.flagged[i] && kp.k_c[i].is_finite() {
            kc_min = kc_min.min(kp.k_c[i]);
            kc_max = kc_max.max(kp.k_c[i]);
        }
    }
    Ok(ConstantWidthReport {
        width: d,
        radii_sum_deviation: radii_dev,
        length_identity_deviation: length_dev,
        halving_imbalance: halving,
        circular_curvature_spread: (kc_max - kc_min) / (0.5 * (kc_max + kc_min)),
    })
}

/// Containment margins of the extremal osculating circles and anti-circles
/// (positive margins = containment holds with room).
#[derive(Debug, Clone, Serialize)]
pub struct InclusionReport {
    /// min over directions of `h_curve - h_smallest_circle`.
    pub smallest_circle_inside: f64,
    /// min over directions of `h_largest_circle - h_curve`.
    pub largest_circle_outside: f64,
    pub smallest_anti_circle_inside: f64,
    pub largest_anti_circle_outside: f64,
}

/// Verifies the containment of the extremal osculating circles and
/// anti-circles by support-function comparison on a direction grid.
///
/// In planes whose unit circle has flat points (l_p with p > 2), the
/// circular curvature is unbounded on curves crossing those directions and
/// the normal curvature reaches zero: the smallest curvature circle then
/// degenerates toward a point and the largest anti-circle toward a
/// half-plane, so those two containments hold with margins near zero.
pub fn inclusion_check(curve: &PlaneCurve, profile: &NormProfile) -> Result<InclusionReport> {
    let support = SupportFn::new(curve, profile)?;
    let kp = curvatures(curve, profile)?;
    // extremal circular and normal curvatures over unflagged samples
    let mut best = [(f64::NEG_INFINITY, 0.0), (f64::INFINITY, 0.0)]; // (k_c max, t), (k_c min, t)
    let mut best_n = [(f64::NEG_INFINITY, 0.0), (f64::INFINITY, 0.0)];
    for i in 0..kp.len() {
        if kp.flagged[i] || !kp.k_c[i].is_finite() {
            continue;
        }
        if kp.k_c[i] > best[0].0 {
            best[0] = (kp.k_c[i], kp.t[i]);
        }
        if kp.k_c[i] < best[1].0 {
            best[1] = (kp.k_c[i], kp.t[i]);
        }
        if kp.k_n[i] > best_n[0].0 {
            best_n[0] = (kp.k_n[i], kp.t[i]);
        }
        if kp.k_n[i] < best_n[1].0 {
            best_n[1] = (kp.k_n[i], kp.t[i]);
        }
    }
    // refine each extremum off the grid: the osculating body touches the
    // curve at exactly that point, so an O(h^2) offset in the extremal
    // parameter shows up directly in the contact margin
    let (t0, t1) = curve.domain();
    let step = (t1 - t0) / curve.samples_n() as f64;
    let refine = |t_seed: f64, kind: CurvatureKind, maximize: bool| -> f64 {
        let value = |t: f64| -> f64 {
            match curvature_at(curve, profile, t) {
                Ok(k) => {
                    let v = match kind {
                        CurvatureKind::Circular => k.k_c,
                        _ => k.k_n,
                    };
                    if k.flagged || !v.is_finite() {
                        f64::INFINITY * if maximize { -1.0 } else { 1.0 }
                    } else if maximize {
                        -v
                    } else {
                        v
                    }
                }
                Err(_) => f64::INFINITY,
            }
        };
        crate::numerics::golden_min(value, t_seed - step, t_seed + step, 1e-12).0
    };
    best[0].1 = refine(best[0].1, CurvatureKind::Circular, true);
    best[1].1 = refine(best[1].1, CurvatureKind::Circular, false);
    best_n[0].1 = refine(best_n[0].1, CurvatureKind::Normal, true);
    best_n[1].1 = refine(best_n[1].1, CurvatureKind::Normal, false);

    let circle_center_radius = |t: f64| -> Result<(Vec2, f64)> {
        let v = curve.deriv1(t);
        let a = curve.deriv2(t);
        let r = v.norm_e();
        let k_e = v.det(a) / (r * r * r);
        let beta = v.angle();
        let rho = profile.kphi_at_tangent(beta) / k_e;
        Ok((curve.eval(t) - rho * profile.phi(profile.tangent_param(beta)), rho))
    };
    let anti_center_radius = |t: f64| -> Result<(Vec2, f64)> {
        let v = curve.deriv1(t);
        let a = curve.deriv2(t);
        let r = v.norm_e();
        let k_e = v.det(a) / (r * r * r);
        let beta = v.angle();
        let sigma = profile.determinant().scale;
        let rho_n = sigma / (k_e * profile.hpp_plus_h(beta));
        Ok((curve.eval(t) + rho_n * profile.right_normal(beta), rho_n))
    };

    let n_dirs = 512;
    let margin = |center: Vec2, radius: f64, anti: bool, curve_inside: bool| -> f64 {
        let mut worst = f64::INFINITY;
        for i in 0..n_dirs {
            let alpha = 2.0 * PI * i as f64 / n_dirs as f64;
            let h_body = center.dot(Vec2::from_angle(alpha))
                + radius
                    * if anti {
                        profile.euclid_support_anti(alpha)
                    } else {
                        profile.euclid_support(alpha)
                    };
            let h_curve = support.eval(alpha);
            let diff = if curve_inside {
                h_body - h_curve
            } else {
                h_curve - h_body
            };
            worst = worst.min(diff);
        }
        worst
    };

    let (c_small, r_small) = circle_center_radius(best[0].1)?;
    let (c_big, r_big) = circle_center_radius(best[1].1)?;
    let (a_small, ar_small) = anti_center_radius(best_n[0].1)?;
    let (a_big, ar_big) = anti_center_radius(best_n[1].1)?;
    Ok(InclusionReport {
        smallest_circle_inside: margin(c_small, r_small, false, false),
        largest_circle_outside: margin(c_big, r_big, false, true),
        smallest_anti_circle_inside: margin(a_small, ar_small, true, false),
        largest_anti_circle_outside: margin(a_big, ar_big, true, true),
    })
}

/// Support-dominance containment test between two convex curves, positioned
/// as given.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SupportComparison {
    pub contains: bool,
    /// min over directions of `h_a - h_b`; nonnegative when the region of
    /// `a` contains the region of `b`.
    pub margin: f64,
}

pub fn support_comparison(
    curve_a: &PlaneCurve,
    curve_b: &PlaneCurve,
    profile: &NormProfile,
    tol: f64,
) -> Result<SupportComparison> {
    let sa = SupportFn::new(curve_a, profile)?;
    let sb = SupportFn::new(curve_b, profile)?;
    let n = 1024;
    let mut margin = f64::INFINITY;
    for i in 0..n {
        let alpha = 2.0 * PI * i as f64 / n as f64;
        margin = margin.min(sa.eval(alpha) - sb.eval(alpha));
    }
    Ok(SupportComparison {
        contains: margin >= -tol,
        margin,
    })
}

/// A four-vertex count for one curvature kind.
#[derive(Debug, Clone, Serialize)]
pub struct FourVertexReport {
    pub kind: CurvatureKind,
    /// Number of strict local extrema of the curvature over one period.
    pub extrema_count: usize,
    /// Parameter values of the extrema.
    pub extrema_params: Vec<f64>,
    /// Opposite-point pairs (parameter values) with equal curvature.
    pub equal_pairs: Vec<(f64, f64)>,
    /// The curvature is constant: every point is an extremum, none listed.
    pub degenerate_constant: bool,
    /// The curvature agrees at every opposite pair (centrally symmetric
    /// curve); three representative pairs are listed.
    pub all_pairs_equal: bool,
}

/// Circular count of strict local extrema of one curvature array, with
/// flagged samples filled from their neighbors. Returns `None` when the
/// curvature is constant within tolerance (a degenerate continuum).
pub fn extrema_of_profile(
    kp: &crate::curvature::CurvatureProfile,
    kind: CurvatureKind,
) -> Option<(usize, Vec<f64>)> {
    let raw = kp.values(kind);
    let n = kp.len() - 1; // drop the duplicated endpoint

    // fill flagged or non-finite samples from their neighbors so the extrema
    // scan sees a continuous sequence
    let mut values: Vec<f64> = raw[..n].to_vec();
    for i in 0..n {
        if kp.flagged[i] || !values[i].is_finite() {
            let mut prev = (i + n - 1) % n;
            while !values[prev].is_finite() && prev != i {
                prev = (prev + n - 1) % n;
            }
            let mut next = (i + 1) % n;
            while !values[next].is_finite() && next != i {
                next = (next + 1) % n;
            }
            values[i] = 0.5 * (values[prev] + values[next]);
        }
    }

    let vmax = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let vmin = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let scale = vmax.abs().max(vmin.abs()).max(1e-300);
    if vmax - vmin < 1e-9 * scale {
        return None;
    }

    // strict local extrema around the circle: sign changes of consecutive
    // differences, plateaus collapsed
    let atol = 1e-12 * scale;
    let mut signs = Vec::with_capacity(n);
    let mut idx = Vec::with_capacity(n);
    for i in 0..n {
        let d = values[(i + 1) % n] - values[i];
        if d.abs() > atol {
            signs.push(d.signum());
            idx.push(i);
        }
    }
    let mut extrema_params = Vec::new();
    for j in 0..signs.len() {
        let k = (j + 1) % signs.len();
        if signs[j] != signs[k] {
            extrema_params.push(kp.t[(idx[k]) % n]);
        }
    }
    Some((extrema_params.len(), extrema_params))
}

pub fn four_vertex_report(
    curve: &PlaneCurve,
    profile: &NormProfile,
    kind: CurvatureKind,
) -> Result<FourVertexReport> {
    if !curve.closed() {
        return Err(Error::NotConvex("four-vertex analysis needs a closed curve".into()));
    }
    let support = SupportFn::new(curve, profile)?;
    let kp = curvatures(curve, profile)?;
    let Some((extrema_count, extrema_params)) = extrema_of_profile(&kp, kind) else {
        return Ok(FourVertexReport {
            kind,
            extrema_count: 0,
            extrema_params: Vec::new(),
            equal_pairs: Vec::new(),
            degenerate_constant: true,
            all_pairs_equal: true,
        });
    };
    let scale = kp
        .values(kind)
        .iter()
        .filter(|v| v.is_finite())
        .fold(0.0f64, |a, b| a.max(b.abs()));

    // opposite points with equal curvature: roots of
    // g(beta) = k(beta) - k(beta + pi)
    let beta0 = support.table().theta_tan[0];
    let k_of_beta = |beta: f64| -> f64 {
        let t = support.param_at_tangent(beta);
        match curvature_at(curve, profile, t) {
            Ok(k) => match kind {
                CurvatureKind::Euclidean => k.k_e,
                CurvatureKind::Minkowski => k.k_m,
                CurvatureKind::Normal => k.k_n,
                CurvatureKind::Circular => k.k_c,
                CurvatureKind::ArcLength => k.k_l,
            },
            Err(_) => f64::NAN,
        }
    };
    let g = |beta: f64| k_of_beta(beta) - k_of_beta(beta + PI);
    let m = 256;
    let gs: Vec<f64> = (0..=m)
        .map(|i| g(beta0 + PI * i as f64 / m as f64))
        .collect();
    let gmax = gs.iter().filter(|v| v.is_finite()).fold(0.0f64, |a, b| a.max(b.abs()));
    let mut equal_pairs = Vec::new();
    let mut all_pairs_equal = false;
    if gmax < 1e-9 * scale {
        // centrally symmetric: every pair matches
        all_pairs_equal = true;
        for i in 0..3 {
            let beta = beta0 + PI * i as f64 / 3.0;
            equal_pairs.push((
                support.param_at_tangent(beta),
                support.param_at_tangent(beta + PI),
            ));
        }
    } else {
        for i in 0..m {
            let (a, b) = (gs[i], gs[i + 1]);
            if !a.is_finite() || !b.is_finite() {
                continue;
            }
            if a == 0.0 || a * b < 0.0 {
                let lo = beta0 + PI * i as f64 / m as f64;
                let hi = beta0 + PI * (i + 1) as f64 / m as f64;
                let root = if a == 0.0 { lo } else { bisect(&g, lo, hi, 1e-10) };
                equal_pairs.push((
                    support.param_at_tangent(root),
                    support.param_at_tangent(root + PI),
                ));
            }
        }
    }

    Ok(FourVertexReport {
        kind,
        extrema_count,
        extrema_params,
        equal_pairs,
        degenerate_constant: false,
        all_pairs_equal,
    })
}

/// Plane classification probes.
#[derive(Debug, Clone, Serialize)]
pub struct PlaneProbes {
    /// Residual Radon deviation after the optimal determinant rescaling.
    pub radon_deviation: f64,
    /// `max |k_n - k_c|` on the unit circle (zero iff Radon).
    pub normal_vs_circular_on_circle: f64,
    /// `max |k_m - k_n|` on the unit circle (zero iff Euclidean).
    pub minkowski_vs_normal_on_circle: f64,
    /// Variance of `k_m` on the unit circle (zero iff Euclidean).
    pub minkowski_variance_on_circle: f64,
}

pub fn plane_probes(profile: &NormProfile) -> Result<PlaneProbes> {
    let radon = profile.is_radon(1e-9);
    let circle = PlaneCurve::unit_circle(profile);
    let kp = curvatures(&circle, profile)?;
    let mut dev_nc: f64 = 0.0;
    let mut dev_mn: f64 = 0.0;
    let mut km_sum = 0.0;
    let mut km_sq = 0.0;
    let mut count = 0usize;
    for i in 0..kp.len() {
        if kp.flagged[i] || !kp.k_c[i].is_finite() {
            continue;
        }
        dev_nc = dev_nc.max((kp.k_n[i] - kp.k_c[i]).abs());
        dev_mn = dev_mn.max((kp.k_m[i] - kp.k_n[i]).abs());
        km_sum += kp.k_m[i];
        km_sq += kp.k_m[i] * kp.k_m[i];
        count += 1;
    }
    let mean = km_sum / count as f64;
    Ok(PlaneProbes {
        radon_deviation: radon.deviation,
        normal_vs_circular_on_circle: dev_nc,
        minkowski_vs_normal_on_circle: dev_mn,
        minkowski_variance_on_circle: km_sq / count as f64 - mean * mean,
    })
}

/// Reproducible corpus of smooth strictly convex curves: random support
/// harmonics up to order 4 with coefficients bounded to keep `h'' + h`
/// strictly positive.
pub fn random_convex_family(count: usize, seed: u64) -> Vec<PlaneCurve> {
    let caps = [0.05, 0.06, 0.02, 0.008];
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let coeffs: Vec<(f64, f64)> = caps
                .iter()
                .map(|&c| (rng.uniform(-c, c), rng.uniform(-c, c)))
                .collect();
            PlaneCurve::from_support_harmonics(1.0, &coeffs)
                .expect("coefficient caps guarantee convexity")
        })
        .collect()
}
