//! The fundamental theorem realized numerically: build a curve from a
//! prescribed curvature function of any of the four types, plus the
//! classified constant-curvature curves and normal-line concurrence tests.
//!
//! Prescribing a curvature fixes the Euclidean curvature through the bridge
//! formulas, but the conversion couples to the tangent direction, so the
//! tangent angle solves the scalar ODE `theta'(s) = p(theta) k_e(s, theta)`.
//! The state is the tangent angle alone; the position follows by integrating
//! `gamma' = phi(theta)`, which keeps the speed exactly unit in the norm.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::curvature::CurvatureKind;
use crate::curve::{ParamTarget, PlaneCurve};
use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::interp::UniformHermite;
use crate::norm_plane::NormProfile;
use crate::numerics::simpson;
use crate::spline::PeriodicSpline;

/// Fixed RK4 step count (deterministic output).
pub const RK4_STEPS: usize = 8192;

/// Relative collapse of `h'' + h` below which normal-type reconstruction
/// refuses to divide. The tangent-rate amplification is the reciprocal of
/// this factor, far beyond what a fixed-step integrator can follow.
pub const NORMAL_RATE_GUARD_REL: f64 = 1e-4;

type CurvatureFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Integrates a curve with prescribed curvature `k` of the given type over
/// `[0, length]`, starting at `start` with tangent `start_dir` (a vector of
/// unit norm).
///
/// For the Minkowski, normal and circular types `k` is a function of the
/// Minkowski arc length. For the arc-length type `k` is a function of the
/// anti-norm arc length (its natural parameter) and the result is
/// reparametrized to Minkowski arc length afterwards.
pub fn curve_from_curvature(
    k: impl Fn(f64) -> f64 + Send + Sync + 'static,
    kind: CurvatureKind,
    length: f64,
    profile: &NormProfile,
    start: Vec2,
    start_dir: Vec2,
) -> Result<PlaneCurve> {
    if !(length > 0.0) {
        return Err(Error::InvalidInput("length must be positive".into()));
    }
    let dir_norm = profile.norm_eval(start_dir);
    if (dir_norm - 1.0).abs() > 1e-6 {
        return Err(Error::InvalidInput(format!(
            "start_dir must be unit in the norm (got {dir_norm:.8})"
        )));
    }
    let k: CurvatureFn = Arc::new(k);
    let theta0 = start_dir.angle();
    match kind {
        CurvatureKind::Euclidean => Err(Error::InvalidInput(
            "prescribe one of the four Minkowski curvature types".into(),
        )),
        CurvatureKind::ArcLength => {
            let curve = integrate_anti(k, length, profile, start, theta0)?;
            let (reparam, _) = curve.reparametrize(profile, ParamTarget::NormArclength)?;
            Ok(reparam)
        }
        _ => integrate_norm(k, kind, length, profile, start, theta0),
    }
}

/// Tangent-angle rate for the types prescribed against Minkowski arc length.
fn theta_rate(kind: CurvatureKind, profile: &NormProfile, s: f64, theta: f64, k: &CurvatureFn) -> Result<f64> {
    let sigma = profile.determinant().scale;
    let p = profile.p(theta);
    Ok(match kind {
        // k_m = sigma k_e p^3  =>  theta' = p k_e = k / (sigma p^2)
        CurvatureKind::Minkowski => k(s) / (sigma * p * p),
        // k_c = k_e / k_phi    =>  theta' = p k_phi k_c
        CurvatureKind::Circular => p * profile.kphi_at_tangent(theta) * k(s),
        // k_n = k_e (h''+h) / sigma  =>  theta' = sigma p k / (h''+h)
        CurvatureKind::Normal => {
            let hpp = profile.hpp_plus_h(theta);
            if !hpp.is_finite() || hpp.abs() < NORMAL_RATE_GUARD_REL * profile.hpp_guard_scale() {
                return Err(Error::GuardViolation);
            }
            sigma * p * k(s) / hpp
        }
        _ => unreachable!(),
    })
}

fn integrate_norm(
    k: CurvatureFn,
    kind: CurvatureKind,
    length: f64,
    profile: &NormProfile,
    start: Vec2,
    theta0: f64,
) -> Result<PlaneCurve> {
    if kind == CurvatureKind::Circular {
        // a flat initial direction makes the circular-curvature IVP
        // degenerate: the tangent rate vanishes identically there
        let kphi0 = profile.kphi_at_tangent(theta0);
        if !kphi0.is_finite() || kphi0.abs() < 1e-5 * profile.kphi_guard_scale() {
            return Err(Error::GuardViolation);
        }
    }
    let n = RK4_STEPS;
    let h = length / n as f64;
    let mut thetas = Vec::with_capacity(n + 1);
    let mut xs = Vec::with_capacity(n + 1);
    let mut ys = Vec::with_capacity(n + 1);
    let mut state = (theta0, start.x, start.y);
    thetas.push(state.0);
    xs.push(state.1);
    ys.push(state.2);
    let rhs = |s: f64, st: (f64, f64, f64)| -> Result<(f64, f64, f64)> {
        let dtheta = theta_rate(kind, profile, s, st.0, &k)?;
        let pt = profile.phi(st.0);
        Ok((dtheta, pt.x, pt.y))
    };
    for i in 0..n {
        let s = i as f64 * h;
        let prev_theta = state.0;
        // the circular tangent rate has a square-root-type zero at flat
        // directions of the unit circle; a fixed 32-fold substep inside any
        // macro step that starts near one keeps the crossing accurate while
        // staying deterministic (the rule depends only on the state)
        let substeps = if kind == CurvatureKind::Circular
            && profile.kphi_at_tangent(state.0).abs() < 0.25 * profile.kphi_guard_scale()
        {
            32
        } else {
            1
        };
        let hs = h / substeps as f64;
        for j in 0..substeps {
            state = rk4_step(state, s + j as f64 * hs, hs, &rhs)?;
        }
        if kind == CurvatureKind::Normal
            && profile.sweeps_flat_direction(prev_theta, state.0)
        {
            // the conversion k_e = sigma k / (h'' + h) divides by zero
            // somewhere inside this step
            return Err(Error::GuardViolation);
        }
        thetas.push(state.0);
        xs.push(state.1);
        ys.push(state.2);
    }
    // Hermite interpolants with slopes taken from the ODE right-hand side:
    // the derivative of the curve is exactly phi(theta(s)), so the speed is
    // unit in the norm by construction.
    let theta_slopes: Vec<f64> = (0..=n)
        .map(|i| theta_rate(kind, profile, i as f64 * h, thetas[i], &k))
        .collect::<Result<_>>()?;
    let theta_interp = Arc::new(UniformHermite::new(0.0, h, thetas.clone(), theta_slopes));
    let x_interp = Arc::new(UniformHermite::new(
        0.0,
        h,
        xs,
        thetas.iter().map(|&t| profile.phi(t).x).collect(),
    ));
    let y_interp = Arc::new(UniformHermite::new(
        0.0,
        h,
        ys,
        thetas.iter().map(|&t| profile.phi(t).y).collect(),
    ));
    let prof_eval = profile.clone();
    let prof_d2 = profile.clone();
    let theta_e = theta_interp.clone();
    let theta_d2 = theta_interp;
    let k2 = k.clone();
    Ok(PlaneCurve::from_fn(
        move |s| Vec2::new(x_interp.eval(s), y_interp.eval(s)),
        move |s| prof_eval.phi(theta_e.eval(s)),
        move |s| {
            let th = theta_d2.eval(s);
            let rate = theta_rate(kind, &prof_d2, s, th, &k2).unwrap_or(0.0);
            rate * prof_d2.dphi(th)
        },
        (0.0, length),
        false,
    ))
}

fn integrate_anti(
    k: CurvatureFn,
    length: f64,
    profile: &NormProfile,
    start: Vec2,
    theta0: f64,
) -> Result<PlaneCurve> {
    let sigma = profile.determinant().scale;
    let n = RK4_STEPS;
    let h = length / n as f64;
    // k_l = k_e q1^3 / sigma^2 with q1 the scale-1 anti-circle radius;
    // in the anti-norm arc length: dtheta/ds_a = sigma k / q1^2,
    // dgamma/ds_a = (q1/sigma) (cos theta, sin theta)
    let rhs = |s: f64, st: (f64, f64, f64)| -> Result<(f64, f64, f64)> {
        let (q1, _) = profile.anti_radius_d(st.0);
        let dir = Vec2::from_angle(st.0) * (q1 / sigma);
        Ok((sigma * k(s) / (q1 * q1), dir.x, dir.y))
    };
    let mut state = (theta0, start.x, start.y);
    let mut thetas = vec![state.0];
    let mut xs = vec![state.1];
    let mut ys = vec![state.2];
    for i in 0..n {
        let s = i as f64 * h;
        state = rk4_step(state, s, h, &rhs)?;
        thetas.push(state.0);
        xs.push(state.1);
        ys.push(state.2);
    }
    let theta_slopes: Vec<f64> = (0..=n)
        .map(|i| {
            let (q1, _) = profile.anti_radius_d(thetas[i]);
            sigma * k(i as f64 * h) / (q1 * q1)
        })
        .collect();
    let theta_interp = Arc::new(UniformHermite::new(0.0, h, thetas.clone(), theta_slopes));
    let speed = |th: f64| {
        let (q1, _) = profile.anti_radius_d(th);
        q1 / sigma
    };
    let x_interp = Arc::new(UniformHermite::new(
        0.0,
        h,
        xs,
        thetas.iter().map(|&t| speed(t) * t.cos()).collect(),
    ));
    let y_interp = Arc::new(UniformHermite::new(
        0.0,
        h,
        ys,
        thetas.iter().map(|&t| speed(t) * t.sin()).collect(),
    ));
    let prof1 = profile.clone();
    let prof2 = profile.clone();
    let th_e = theta_interp.clone();
    let th_d = theta_interp;
    let k2 = k.clone();
    Ok(PlaneCurve::from_fn(
        move |s| Vec2::new(x_interp.eval(s), y_interp.eval(s)),
        move |s| {
            let th = th_e.eval(s);
            let (q1, _) = prof1.anti_radius_d(th);
            Vec2::from_angle(th) * (q1 / sigma)
        },
        move |s| {
            let th = th_d.eval(s);
            let (q1, dq1) = prof2.anti_radius_d(th);
            let rate = sigma * k2(s) / (q1 * q1);
            // d/ds_a [ (q1/sigma) (cos, sin) ]
            (Vec2::from_angle(th) * (dq1 / sigma) + Vec2::from_angle(th).perp() * (q1 / sigma))
                * rate
        },
        (0.0, length),
        false,
    ))
}

fn rk4_step(
    state: (f64, f64, f64),
    s: f64,
    h: f64,
    rhs: &impl Fn(f64, (f64, f64, f64)) -> Result<(f64, f64, f64)>,
) -> Result<(f64, f64, f64)> {
    let add = |a: (f64, f64, f64), b: (f64, f64, f64), c: f64| {
        (a.0 + c * b.0, a.1 + c * b.1, a.2 + c * b.2)
    };
    let k1 = rhs(s, state)?;
    let k2 = rhs(s + 0.5 * h, add(state, k1, 0.5 * h))?;
    let k3 = rhs(s + 0.5 * h, add(state, k2, 0.5 * h))?;
    let k4 = rhs(s + h, add(state, k3, h))?;
    Ok((
        state.0 + h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
        state.1 + h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
        state.2 + h / 6.0 * (k1.2 + 2.0 * k2.2 + 2.0 * k3.2 + k4.2),
    ))
}

/// The classified curves of constant curvature.
///
/// * circular: a Minkowski circle of radius `1/value`;
/// * normal: the anti-circle scaled by `1/value`;
/// * Minkowski: the curve whose support function solves
///   `h'' + h = sigma p(theta + pi/2)^3`, a homothet of the centroid curve
///   of the unit circle;
/// * arc-length: the analogous construction on the anti-circle.
pub fn constant_curvature_curve(
    kind: CurvatureKind,
    value: f64,
    profile: &NormProfile,
) -> Result<PlaneCurve> {
    if value == 0.0 || !value.is_finite() {
        return Err(Error::ZeroCurvature);
    }
    let radius = 1.0 / value.abs();
    let reverse = value < 0.0;
    let curve = match kind {
        CurvatureKind::Euclidean => {
            return Err(Error::InvalidInput(
                "prescribe one of the four Minkowski curvature types".into(),
            ))
        }
        CurvatureKind::Circular => scale_curve(&PlaneCurve::unit_circle(profile), radius),
        CurvatureKind::Normal => scale_curve(&PlaneCurve::anti_circle(profile)?, radius),
        CurvatureKind::Minkowski => {
            let sigma = profile.determinant().scale;
            let prof = profile.clone();
            let integrand = move |u: f64, theta: f64| {
                let p = prof.p(u + 0.5 * PI);
                sigma * p * p * p * (u - theta).sin()
            };
            scale_curve(&support_solution_curve(integrand)?, radius)
        }
        CurvatureKind::ArcLength => {
            let sigma = profile.determinant().scale;
            let prof = profile.clone();
            let integrand = move |u: f64, theta: f64| {
                let (q1, _) = prof.anti_radius_d(u + 0.5 * PI);
                let q = q1 / sigma;
                q * q * q * sigma * sigma * (u - theta).sin()
            };
            scale_curve(&support_solution_curve(integrand)?, radius)
        }
    };
    Ok(if reverse { curve.reversed() } else { curve })
}

fn scale_curve(curve: &PlaneCurve, factor: f64) -> PlaneCurve {
    let c1 = curve.clone();
    let c2 = curve.clone();
    let c3 = curve.clone();
    let domain = curve.domain();
    let closed = curve.closed();
    PlaneCurve::from_fn(
        move |t| c1.eval(t) * factor,
        move |t| c2.deriv1(t) * factor,
        move |t| c3.deriv2(t) * factor,
        domain,
        closed,
    )
}

/// Solves `h'' + h = f(theta)` with periodic boundary by the explicit
/// sine-kernel integral `h(theta) = 1/2 integral_theta^{theta+pi} f(u)
/// sin(u - theta) du`, then converts the support function to a curve.
fn support_solution_curve(
    integrand: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
) -> Result<PlaneCurve> {
    let n_out = 2048;
    let mut h_vals = Vec::with_capacity(n_out);
    for i in 0..n_out {
        let theta = i as f64 * 2.0 * PI / n_out as f64;
        let value = 0.5 * simpson(|u| integrand(u, theta), theta, theta + PI, 4096);
        h_vals.push(value);
    }
    let h_spline = Arc::new(PeriodicSpline::new(0.0, 2.0 * PI, h_vals));
    let s1 = h_spline.clone();
    let s2 = h_spline.clone();
    let s3 = h_spline;
    let curve = PlaneCurve::from_fn(
        move |t| {
            let n = Vec2::from_angle(t);
            s1.eval(t) * n + s1.deriv1(t) * n.perp()
        },
        move |t| (s2.deriv2(t) + s2.eval(t)) * Vec2::from_angle(t).perp(),
        move |t| {
            let n = Vec2::from_angle(t);
            (s3.deriv3(t) + s3.deriv1(t)) * n.perp() - (s3.deriv2(t) + s3.eval(t)) * n
        },
        (0.0, 2.0 * PI),
        true,
    );
    Ok(curve)
}

/// Which normal-line family to intersect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalSide {
    /// Lines through `gamma(s)` in the direction of the unit-circle point
    /// aligned with the tangent (the left-normal lines; they envelope the
    /// evolute).
    Left,
    /// Lines in the direction of the right normal field.
    Right,
}

/// Result of the normal-concurrence probe: the least-squares common point of
/// the normal-line family and the worst distance from a line to it.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ConcurrenceReport {
    pub point: Vec2,
    pub max_residual: f64,
}

/// Least-squares intersection of the left- or right-normal lines of a curve.
/// The residual vanishes precisely when the curve is contained in a
/// Minkowski circle (left) or anti-circle (right).
pub fn normal_concurrence_test(
    curve: &PlaneCurve,
    profile: &NormProfile,
    side: NormalSide,
) -> Result<ConcurrenceReport> {
    curve.check_regular()?;
    let n = 512;
    let (t0, t1) = curve.domain();
    let mut a11 = 0.0;
    let mut a12 = 0.0;
    let mut a22 = 0.0;
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    let mut lines = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = t0 + (t1 - t0) * i as f64 / n as f64;
        let point = curve.eval(t);
        let beta = curve.deriv1(t).angle();
        let dir = match side {
            NormalSide::Left => profile.phi(profile.tangent_param(beta)),
            NormalSide::Right => profile.right_normal(beta),
        };
        let m = dir.perp().normalized_e();
        a11 += m.x * m.x;
        a12 += m.x * m.y;
        a22 += m.y * m.y;
        let mp = m.dot(point);
        b1 += m.x * mp;
        b2 += m.y * mp;
        lines.push((m, point));
    }
    let det = a11 * a22 - a12 * a12;
    if det.abs() < 1e-12 * (a11 + a22).powi(2) {
        return Err(Error::InvalidInput(
            "normal lines are near-parallel; no well-defined intersection".into(),
        ));
    }
    let x = Vec2::new((a22 * b1 - a12 * b2) / det, (a11 * b2 - a12 * b1) / det);
    let max_residual = lines
        .iter()
        .map(|(m, p)| (m.dot(x - *p)).abs())
        .fold(0.0, f64::max);
    Ok(ConcurrenceReport {
        point: x,
        max_residual,
    })
}
