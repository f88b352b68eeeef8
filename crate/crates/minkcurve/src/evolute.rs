//! Evolutes, involutes, left parallels, osculating circles, vertices and
//! squared-distance singularity diagnostics.
//!
//! The evolute is the locus of curvature centers,
//! `xi(s) = gamma(s) - rho(s) phi(t(s))`, where `rho` is the circular
//! curvature radius and `phi(t(s))` the unit-circle point whose tangent is
//! parallel to the curve's. Its output is a point set rather than a
//! `PlaneCurve`: cusps at the vertices break regularity. The radius is
//! evaluated as the ratio `k_phi / k_e`, which stays clean through flat
//! directions of the unit circle (the evolute touches the curve there).
//!
//! Everything is mirrored for the anti-norm: the right-sided evolute is the
//! locus of osculating anti-circle centers along the right normal field.

use std::f64::consts::PI;

use serde::Serialize;

use crate::curvature::curvature_at;
use crate::curve::{Metric, PlaneCurve};
use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::norm_plane::NormProfile;
use crate::numerics::{bisect, fd_derivative};
use crate::spline::{Boundary, CubicSpline, PeriodicSpline};

/// Minimum |k_e| relative to the curve scale below which the curvature
/// center is unbounded.
const VANISHING_KE_REL: f64 = 1e-9;

/// Sampled evolute with cusp diagnostics.
#[derive(Debug, Clone, Serialize)]
pub struct Evolute {
    /// Arc-length positions of the samples on the base curve.
    pub s: Vec<f64>,
    /// Evolute points (curvature centers).
    pub points: Vec<Vec2>,
    /// Circular curvature radius at each sample.
    pub rho: Vec<f64>,
    /// Arc-length positions of the cusps (sign changes of `rho'`).
    pub cusps: Vec<f64>,
}

impl Evolute {
    /// Splits the evolute at its cusps into regular arcs, each returned as a
    /// sampled open curve. Arcs with fewer than 4 samples are dropped.
    pub fn arcs(&self) -> Vec<PlaneCurve> {
        let mut boundaries = vec![self.s[0]];
        boundaries.extend(self.cusps.iter().copied());
        boundaries.push(*self.s.last().unwrap());
        let mut out = Vec::new();
        for w in boundaries.windows(2) {
            let pts: Vec<Vec2> = self
                .s
                .iter()
                .zip(&self.points)
                .filter(|(s, _)| **s >= w[0] && **s <= w[1])
                .map(|(_, p)| *p)
                .collect();
            if pts.len() >= 4 {
                if let Ok(curve) = PlaneCurve::from_points(&pts, false) {
                    out.push(curve);
                }
            }
        }
        out
    }
}

struct RadiusField {
    s: Vec<f64>,
    rho: Vec<f64>,
    centers: Vec<Vec2>,
    closed: bool,
    span: f64,
    s0: f64,
}

/// Common machinery for both sides: sample the curvature radius and the
/// center field, locate cusps by bisection on the radius derivative.
///
/// The radius is the ratio `k_phi / k_e` (resp. `sigma / (k_e (h''+h))`).
/// Where the curve's tangent crosses a flat direction of the unit circle
/// both numerator and denominator vanish together; such isolated samples
/// are indeterminate 0/0 and get filled from their neighbors. A vanishing
/// `k_e` away from flat directions is a genuine inflection and errors.
fn radius_field(
    curve: &PlaneCurve,
    profile: &NormProfile,
    right_side: bool,
) -> Result<RadiusField> {
    require_unit_speed(curve, profile)?;
    let n = curve.samples_n();
    let (s0, s1) = curve.domain();
    let span = s1 - s0;
    let mut s = Vec::with_capacity(n + 1);
    let mut ke_vals = Vec::with_capacity(n + 1);
    let mut betas = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let si = s0 + span * i as f64 / n as f64;
        let v = curve.deriv1(si);
        let a = curve.deriv2(si);
        let r = v.norm_e();
        s.push(si);
        ke_vals.push(v.det(a) / (r * r * r));
        betas.push(v.angle());
    }
    let mut sorted: Vec<f64> = ke_vals.iter().map(|k| k.abs()).collect();
    sorted.sort_by(f64::total_cmp);
    let ke_scale = sorted[sorted.len() / 2].max(1.0 / span.max(1.0));
    let ke_floor = VANISHING_KE_REL * ke_scale;

    let sigma = profile.determinant().scale;
    let mut rho = vec![f64::NAN; n + 1];
    let mut fill = Vec::new();
    for i in 0..=n {
        let k_e = ke_vals[i];
        let beta = betas[i];
        if right_side {
            // radius of the osculating anti-circle: 1 / k_n. The product
            // k_e (h''+h) stays finite through curvature spikes; only an
            // exactly singular sample (inf * 0) is indeterminate.
            let hpp = profile.hpp_plus_h(beta);
            let k_n = k_e * hpp / sigma;
            if !k_n.is_finite() {
                fill.push(i);
            } else if k_n.abs() < ke_floor {
                return Err(Error::VanishingCurvature);
            } else {
                rho[i] = 1.0 / k_n;
            }
        } else {
            // radius of the osculating circle: k_phi / k_e. Both vanish
            // together where the tangent crosses a flat direction; that
            // ratio is indeterminate only at exact hits.
            let kphi = profile.kphi_at_tangent(beta);
            let kphi_small = !kphi.is_finite() || kphi.abs() < 1e-5 * profile.kphi_guard_scale();
            if k_e.abs() < ke_floor {
                if kphi_small {
                    fill.push(i);
                } else {
                    return Err(Error::VanishingCurvature);
                }
            } else {
                let r = kphi / k_e;
                if r.is_finite() {
                    rho[i] = r;
                } else {
                    fill.push(i);
                }
            }
        }
    }
    if fill.len() > (n + 1) / 8 {
        return Err(Error::VanishingCurvature);
    }
    // fill indeterminate samples by linear interpolation between good
    // neighbors
    for &i in &fill {
        let mut lo = i;
        let mut hi = i;
        while lo > 0 && !rho[lo].is_finite() {
            lo -= 1;
        }
        while hi < n && !rho[hi].is_finite() {
            hi += 1;
        }
        rho[i] = match (rho[lo].is_finite(), rho[hi].is_finite()) {
            (true, true) => {
                let w = (s[i] - s[lo]) / (s[hi] - s[lo]);
                rho[lo] * (1.0 - w) + rho[hi] * w
            }
            (true, false) => rho[lo],
            (false, true) => rho[hi],
            (false, false) => return Err(Error::VanishingCurvature),
        };
    }
    let mut centers = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let beta = betas[i];
        let direction = if right_side {
            -profile.right_normal(beta)
        } else {
            profile.phi(profile.tangent_param(beta))
        };
        centers.push(curve.eval(s[i]) - rho[i] * direction);
    }
    Ok(RadiusField {
        s,
        rho,
        centers,
        closed: curve.closed(),
        span,
        s0,
    })
}

enum RhoSpline {
    Periodic(PeriodicSpline),
    Open(CubicSpline),
}

impl RhoSpline {
    fn deriv1(&self, s: f64) -> f64 {
        match self {
            RhoSpline::Periodic(sp) => sp.deriv1(s),
            RhoSpline::Open(sp) => sp.deriv1(s),
        }
    }
}

fn rho_spline(field: &RadiusField) -> RhoSpline {
    if field.closed {
        let n = field.rho.len() - 1;
        RhoSpline::Periodic(PeriodicSpline::new(
            field.s0,
            field.span,
            field.rho[..n].to_vec(),
        ))
    } else {
        RhoSpline::Open(CubicSpline::new(
            field.s.clone(),
            field.rho.clone(),
            Boundary::Natural,
        ))
    }
}

fn locate_cusps(field: &RadiusField) -> Vec<f64> {
    let spline = rho_spline(field);
    let mut cusps = Vec::new();
    let n = field.s.len() - 1;
    let derivs: Vec<f64> = field.s.iter().map(|&s| spline.deriv1(s)).collect();
    for i in 0..n {
        let (d0, d1) = (derivs[i], derivs[i + 1]);
        if d0 == 0.0 {
            cusps.push(field.s[i]);
        } else if d0 * d1 < 0.0 {
            let root = bisect(|s| spline.deriv1(s), field.s[i], field.s[i + 1], 1e-10);
            cusps.push(root);
        }
    }
    cusps
}

/// Evolute of a curve parametrized by Minkowski arc length.
/// Requires a nonvanishing Euclidean curvature (circular curvature and its
/// radius stay finite through unit-circle flat points).
pub fn evolute(curve: &PlaneCurve, profile: &NormProfile) -> Result<Evolute> {
    let field = radius_field(curve, profile, false)?;
    let cusps = locate_cusps(&field);
    Ok(Evolute {
        s: field.s,
        points: field.centers,
        rho: field.rho,
        cusps,
    })
}

/// Right-sided evolute: the locus of osculating anti-circle centers,
/// `gamma(s) + (1/k_n) n(s)`.
pub fn right_evolute(curve: &PlaneCurve, profile: &NormProfile) -> Result<Evolute> {
    let field = radius_field(curve, profile, true)?;
    let cusps = locate_cusps(&field);
    Ok(Evolute {
        s: field.s,
        points: field.centers,
        rho: field.rho,
        cusps,
    })
}

/// Involute `eta(s) = gamma(s) + (c - s) gamma'(s)` of a unit-speed curve.
/// The constant `c` is the free string length; `eta` is returned in the
/// parameter of the base curve (it is not unit-speed itself).
pub fn involute(curve: &PlaneCurve, profile: &NormProfile, c: f64) -> Result<PlaneCurve> {
    require_unit_speed(curve, profile)?;
    let base = curve.clone();
    let b1 = curve.clone();
    let b2 = curve.clone();
    let (t0, t1) = curve.domain();
    let hfd = 1e-6 * (t1 - t0).max(1.0);
    Ok(PlaneCurve::from_fn(
        move |s| base.eval(s) + (c - s) * base.deriv1(s),
        move |s| (c - s) * b1.deriv2(s),
        move |s| {
            // eta'' = (c - s) gamma''' - gamma''; gamma''' by a centered
            // difference of the analytic second derivative
            let g3 = (b2.deriv2(s + hfd) - b2.deriv2(s - hfd)) / (2.0 * hfd);
            g3 * (c - s) - b2.deriv2(s)
        },
        (t0, t1),
        false,
    ))
}

/// A left parallel `gamma_d(s) = gamma(s) + d phi(t(s))` of a unit-speed
/// curve, together with the samples where it is singular
/// (`1 + d k_c(s) = 0`).
pub fn left_parallel(
    curve: &PlaneCurve,
    profile: &NormProfile,
    d: f64,
) -> Result<(PlaneCurve, Vec<f64>)> {
    require_unit_speed(curve, profile)?;
    let (t0, t1) = curve.domain();
    let base = curve.clone();
    let prof = profile.clone();
    let eval = move |s: f64| {
        let beta = base.deriv1(s).angle();
        base.eval(s) + d * prof.phi(prof.tangent_param(beta))
    };
    let b1 = curve.clone();
    let p1 = profile.clone();
    let d1 = move |s: f64| {
        let k = curvature_at(&b1, &p1, s).map(|k| k.k_c).unwrap_or(f64::NAN);
        (1.0 + d * k) * b1.deriv1(s)
    };
    let d1_fd = d1.clone();
    let hfd = 1e-6 * (t1 - t0).max(1.0);
    let d2 = move |s: f64| (d1_fd(s + hfd) - d1_fd(s - hfd)) / (2.0 * hfd);
    let parallel = PlaneCurve::from_fn(eval, d1, d2, (t0, t1), curve.closed());
    let singular = singular_params(curve, profile, |k| 1.0 + d * k.k_c)?;
    Ok((parallel, singular))
}

/// Roots of a per-sample singularity indicator, located by sign-change
/// bisection over the grid (plus near-zero samples).
fn singular_params(
    curve: &PlaneCurve,
    profile: &NormProfile,
    indicator: impl Fn(&crate::curvature::PointCurvatures) -> f64,
) -> Result<Vec<f64>> {
    let n = curve.samples_n();
    let (t0, t1) = curve.domain();
    let value = |s: f64| -> f64 {
        match curvature_at(curve, profile, s) {
            Ok(k) if !k.flagged => indicator(&k),
            _ => f64::NAN,
        }
    };
    let mut singular = Vec::new();
    let mut prev = value(t0);
    for i in 0..n {
        let a = t0 + (t1 - t0) * i as f64 / n as f64;
        let b = t0 + (t1 - t0) * (i + 1) as f64 / n as f64;
        let next = value(b);
        if prev == 0.0 {
            singular.push(a);
        } else if prev.is_finite() && next.is_finite() && prev * next < 0.0 {
            singular.push(crate::numerics::bisect(&value, a, b, 1e-10));
        } else if prev.is_finite() && prev.abs() < 1e-6 {
            singular.push(a);
        }
        prev = next;
    }
    Ok(singular)
}

/// Right parallel `gamma(s) + d n(s)`, singular where `1 - d k_n = 0`.
pub fn right_parallel(
    curve: &PlaneCurve,
    profile: &NormProfile,
    d: f64,
) -> Result<(PlaneCurve, Vec<f64>)> {
    require_unit_speed(curve, profile)?;
    let (t0, t1) = curve.domain();
    let base = curve.clone();
    let prof = profile.clone();
    let eval = move |s: f64| base.eval(s) + d * prof.right_normal(base.deriv1(s).angle());
    let b1 = curve.clone();
    let p1 = profile.clone();
    let d1 = move |s: f64| {
        let k = curvature_at(&b1, &p1, s).map(|k| k.k_n).unwrap_or(f64::NAN);
        (1.0 - d * k) * b1.deriv1(s)
    };
    let d1_fd = d1.clone();
    let hfd = 1e-6 * (t1 - t0).max(1.0);
    let d2 = move |s: f64| (d1_fd(s + hfd) - d1_fd(s - hfd)) / (2.0 * hfd);
    let parallel = PlaneCurve::from_fn(eval, d1, d2, (t0, t1), curve.closed());
    let singular = singular_params(curve, profile, |k| 1.0 - d * k.k_n)?;
    Ok((parallel, singular))
}

/// An osculating Minkowski circle.
#[derive(Debug, Clone, Serialize)]
pub struct OsculatingCircle {
    pub center: Vec2,
    pub radius: f64,
}

impl OsculatingCircle {
    /// The circle as a closed curve (`center + radius * phi`).
    pub fn as_curve(&self, profile: &NormProfile) -> PlaneCurve {
        let c = self.center;
        let r = self.radius;
        let p1 = profile.clone();
        let p2 = profile.clone();
        let p3 = profile.clone();
        PlaneCurve::from_fn(
            move |t| c + r * p1.phi(t),
            move |t| r * p2.dphi(t),
            move |t| r * p3.d2phi(t),
            (0.0, 2.0 * PI),
            true,
        )
    }
}

/// Osculating circle at arc-length position `s0` of a unit-speed curve:
/// second-order contact, center on the evolute.
pub fn osculating_circle(
    curve: &PlaneCurve,
    profile: &NormProfile,
    s0: f64,
) -> Result<OsculatingCircle> {
    require_unit_speed(curve, profile)?;
    let v = curve.deriv1(s0);
    let a = curve.deriv2(s0);
    let r = v.norm_e();
    let k_e = v.det(a) / (r * r * r);
    let (span_lo, span_hi) = curve.domain();
    if k_e.abs() < VANISHING_KE_REL / (span_hi - span_lo).max(1.0) {
        return Err(Error::VanishingCurvature);
    }
    let beta = v.angle();
    let rho = profile.kphi_at_tangent(beta) / k_e;
    let center = curve.eval(s0) - rho * profile.phi(profile.tangent_param(beta));
    Ok(OsculatingCircle {
        center,
        radius: rho,
    })
}

/// Vertex classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VertexKind {
    /// `k_c' = 0` and `k_c'' != 0`: the evolute has an ordinary cusp here.
    Ordinary,
    /// `k_c' = 0` with `k_c''` vanishing as well.
    Degenerate,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexReport {
    pub vertices: Vec<(f64, VertexKind)>,
    /// True when the circular curvature is constant within tolerance: every
    /// point is a vertex and none are listed.
    pub degenerate_continuum: bool,
}

/// Locates the vertices (`k_c' = 0`) of a unit-speed curve by sign-change
/// bisection on the spline derivative of the curvature radius. The radius
/// field stays bounded through unit-circle flat points where the curvature
/// itself spikes, and its derivative has exactly the vertex roots.
pub fn vertices(curve: &PlaneCurve, profile: &NormProfile) -> Result<VertexReport> {
    let field = radius_field(curve, profile, false)?;
    let vmax = field.rho.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let vmin = field.rho.iter().cloned().fold(f64::INFINITY, f64::min);
    let scale = vmax.abs().max(vmin.abs());
    if vmax - vmin < 1e-10 * scale.max(1e-300) {
        return Ok(VertexReport {
            vertices: Vec::new(),
            degenerate_continuum: true,
        });
    }
    let n = field.s.len() - 1;
    let span = field.span;
    let spline = rho_spline(&field);
    let (deriv2_of, rho_of): (Box<dyn Fn(f64) -> f64>, Box<dyn Fn(f64) -> f64>) = match &spline {
        RhoSpline::Periodic(sp) => {
            let a = sp.clone();
            let b = sp.clone();
            (Box::new(move |s| a.deriv2(s)), Box::new(move |s| b.eval(s)))
        }
        RhoSpline::Open(sp) => {
            let a = sp.clone();
            let b = sp.clone();
            (Box::new(move |s| a.deriv2(s)), Box::new(move |s| b.eval(s)))
        }
    };
    let mut out = Vec::new();
    let derivs: Vec<f64> = field.s.iter().map(|&s| spline.deriv1(s)).collect();
    // threshold for a vanishing k_c'': scaled by the curvature variation
    let d2_scale = (1.0 / vmin.abs().min(vmax.abs()).max(1e-300)) * (2.0 * PI / span).powi(2);
    let h = span / n as f64;
    let (lo, hi) = (field.s[0], field.s[n]);
    for i in 0..n {
        let root = if derivs[i] == 0.0 {
            Some(field.s[i])
        } else if derivs[i] * derivs[i + 1] < 0.0 {
            Some(bisect(|s| spline.deriv1(s), field.s[i], field.s[i + 1], 1e-10))
        } else {
            None
        };
        if let Some(root) = root {
            // reject sub-grid oscillation roots near curvature blow-ups: the
            // sign change must persist a couple of grid steps out
            let before = spline.deriv1((root - 2.0 * h).max(lo));
            let after = spline.deriv1((root + 2.0 * h).min(hi));
            if before * after > 0.0 {
                continue;
            }
            // at a root of rho': k_c'' = -rho'' / rho^2
            let kc2 = deriv2_of(root).abs() / rho_of(root).powi(2);
            let kind = if kc2 > 1e-5 * d2_scale {
                VertexKind::Ordinary
            } else {
                VertexKind::Degenerate
            };
            out.push((root, kind));
        }
    }
    Ok(VertexReport {
        vertices: out,
        degenerate_continuum: false,
    })
}

/// Order of the singularity of the squared-distance function
/// `f(s) = ||gamma(s) - a||^2` at `s0`: the number of leading vanishing
/// derivatives among `f', f'', f''', f''''` (capped at 4, meaning
/// "4 or more").
#[derive(Debug, Clone, Serialize)]
pub struct SingularityReport {
    pub order: usize,
    /// The four derivative estimates.
    pub derivatives: [f64; 4],
    /// Vanishing thresholds used per order.
    pub thresholds: [f64; 4],
}

/// Classifies `a` against the curve at `s0` via the squared-distance
/// function. Order 1 means `a` lies on the left-normal line, 2 that it is
/// the curvature center, 3 that `s0` is additionally a vertex; order exactly
/// 3 (with `f'''' != 0`) characterizes an ordinary vertex.
pub fn squared_distance_singularity(
    curve: &PlaneCurve,
    profile: &NormProfile,
    a: Vec2,
    s0: f64,
) -> Result<SingularityReport> {
    let (t0, t1) = curve.domain();
    let span = t1 - t0;
    let f = {
        let base = curve.clone();
        let prof = profile.clone();
        move |s: f64| {
            let d = prof.norm_eval(base.eval(s) - a);
            d * d
        }
    };
    if f(s0).sqrt() < 1e-9 {
        return Err(Error::PointOnCurve);
    }
    // centered differences with per-order steps: higher orders need larger
    // steps to stay above roundoff; the first-order step is the 16-fold
    // refined base grid
    let base_h = span / curve.samples_n() as f64;
    let steps = [
        base_h / 16.0,
        span / 4096.0,
        span / 2048.0,
        span / 1024.0,
    ];
    let mut derivs = [0.0; 4];
    let mut thresholds = [0.0; 4];
    let scale = f(s0).abs().max(1.0);
    let mut order = 0;
    for (i, &h) in steps.iter().enumerate() {
        derivs[i] = fd_derivative(&f, s0, h, i + 1);
        // a derivative of order j has natural scale f / w^j with w the local
        // window; the vanishing threshold follows the design tolerance
        thresholds[i] = 1e-5 * scale / span.min(1.0).powi(i as i32 + 1);
        if order == i && derivs[i].abs() < thresholds[i] {
            order = i + 1;
        }
    }
    Ok(SingularityReport {
        order,
        derivatives: derivs,
        thresholds,
    })
}

/// Signed and unsigned length of the evolute of a closed, positively curved
/// unit-speed curve, with the per-arc (between-cusp) signed lengths.
#[derive(Debug, Clone, Serialize)]
pub struct EvoluteLengthReport {
    /// Integral of `-rho'` over one period; zero for closed curves.
    pub signed: f64,
    /// Integral of `|rho'|` (the Minkowski length of the evolute).
    pub unsigned: f64,
    /// Signed length of each arc between consecutive cusps.
    pub per_arc: Vec<f64>,
}

pub fn signed_evolute_length(
    curve: &PlaneCurve,
    profile: &NormProfile,
) -> Result<EvoluteLengthReport> {
    if !curve.closed() {
        return Err(Error::InvalidInput("signed evolute length needs a closed curve".into()));
    }
    let field = radius_field(curve, profile, false)?;
    if field.rho.iter().any(|r| !r.is_finite() || *r <= 0.0) {
        return Err(Error::VanishingCurvature);
    }
    let spline = rho_spline(&field);
    let cusps = locate_cusps(&field);
    let n = field.s.len() - 1;
    let mut signed = 0.0;
    let mut unsigned = 0.0;
    let h = field.span / n as f64;
    for i in 0..n {
        // Simpson panel of rho' and |rho'|
        let s = field.s[i];
        let d0 = spline.deriv1(s);
        let dm = spline.deriv1(s + 0.5 * h);
        let d1 = spline.deriv1(s + h);
        signed += -(d0 + 4.0 * dm + d1) * h / 6.0;
        unsigned += (d0.abs() + 4.0 * dm.abs() + d1.abs()) * h / 6.0;
    }
    // per-arc signed lengths between consecutive cusps (wrapping around)
    let rho_at = |s: f64| match &spline {
        RhoSpline::Periodic(sp) => sp.eval(s),
        RhoSpline::Open(sp) => sp.eval(s),
    };
    let mut per_arc = Vec::new();
    if cusps.len() >= 2 {
        for i in 0..cusps.len() {
            let a = cusps[i];
            let b = if i + 1 < cusps.len() {
                cusps[i + 1]
            } else {
                cusps[0] + field.span
            };
            // signed length of the arc = rho(a) - rho(b)
            per_arc.push(rho_at(a) - rho_at(b));
        }
    }
    Ok(EvoluteLengthReport {
        signed,
        unsigned,
        per_arc,
    })
}

fn require_unit_speed(curve: &PlaneCurve, profile: &NormProfile) -> Result<()> {
    let n = 64;
    let (t0, t1) = curve.domain();
    for i in 0..=n {
        let t = t0 + (t1 - t0) * i as f64 / n as f64;
        let speed = curve.speed(t, profile, Metric::Norm);
        if (speed - 1.0).abs() > 1e-4 {
            return Err(Error::DegenerateSpeed(format!(
                "operation requires a curve parametrized by Minkowski arc length \
                 (speed {speed:.6} at t={t:.6})"
            )));
        }
    }
    Ok(())
}
