//! Smooth, strictly convex, origin-symmetric norms represented by the polar
//! profile of the unit circle.
//!
//! The profile is the positive pi-periodic function giving the Euclidean
//! radius of the unit circle in each direction. Everything else — the
//! anti-norm, the anti-circle, Birkhoff orthogonality, support functions,
//! the parametrization tables of the unit circle — derives from it.

use std::f64::consts::PI;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::interp::MonotoneCubic;
use crate::numerics::{bisect, cumulative_integral, unwrap_angles};
use crate::spline::PeriodicSpline;
use crate::tables::{Column, ParamTable};

/// Default sample count for tabulated profiles and grid checks.
pub const DEFAULT_GRID_N: usize = 4096;

/// Relative flat-point guard: samples where the unit-circle curvature falls
/// below `FLAT_GUARD_REL` times its guard scale (the grid maximum, capped at
/// 50x the median for spiky profiles) are flagged rather than divided by.
pub const FLAT_GUARD_REL: f64 = 1e-8;

/// The fixed determinant form `[x, y] = scale * (x1 y2 - x2 y1)`.
///
/// The scale is a free normalization; it defaults to 1 and only matters when
/// comparing the norm against its anti-norm (Radon rescaling).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeterminantForm {
    pub scale: f64,
}

impl Default for DeterminantForm {
    fn default() -> Self {
        DeterminantForm { scale: 1.0 }
    }
}

impl DeterminantForm {
    #[inline]
    pub fn apply(&self, a: Vec2, b: Vec2) -> f64 {
        self.scale * a.det(b)
    }
}

/// Tag describing where a profile came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ProfileKind {
    Euclidean,
    Lp { exponent: f64 },
    Custom,
}

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum ProfileEval {
    Euclidean,
    Lp { exponent: f64 },
    Analytic { p: ScalarFn, dp: ScalarFn, d2p: ScalarFn },
    Tabulated(PeriodicSpline),
}

/// Polar radius of the unit anti-circle (at determinant scale 1).
#[derive(Clone)]
enum AntiRadius {
    One,
    LpConjugate { exponent: f64 },
    Spline(PeriodicSpline),
}

struct ProfileInner {
    kind: ProfileKind,
    grid_n: usize,
    det: DeterminantForm,
    eval: ProfileEval,
    /// Unwrapped tangent angle of the unit circle at uniform polar nodes.
    tangent_nodes: Vec<f64>,
    tangent_angles: Vec<f64>,
    tangent_forward: MonotoneCubic,
    /// Arc length / sector area / Euclidean length tables of the unit circle.
    circle: ParamTable,
    anti_radius: AntiRadius,
    kphi_max: f64,
    hpp_max: f64,
    kphi_scale: f64,
    hpp_scale: f64,
    flat_dirs: Vec<f64>,
}

/// A norm on the plane, held behind an `Arc` so curves and closures can share
/// it cheaply. Immutable after construction.
#[derive(Clone)]
pub struct NormProfile {
    inner: Arc<ProfileInner>,
}

impl std::fmt::Debug for NormProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NormProfile")
            .field("kind", &self.inner.kind)
            .field("grid_n", &self.inner.grid_n)
            .field("det", &self.inner.det)
            .finish()
    }
}

// Closed-form l_p machinery. F(theta) = |cos|^P + |sin|^P and its first two
// derivatives, grouped so vanishing factors absorb the negative powers that
// appear for exponents below 2 (0 * inf never forms; isolated infinities at
// the axes remain, matching the true curvature blow-up of l_q circles).
fn lp_f(theta: f64, p: f64) -> (f64, f64, f64) {
    let (s, c) = theta.sin_cos();
    let sa = s.abs();
    let ca = c.abs();
    let sp = sa.powf(p);
    let cp = ca.powf(p);
    let sp1 = sa.powf(p - 1.0);
    let cp1 = ca.powf(p - 1.0);
    let sp2 = sa.powf(p - 2.0);
    let cp2 = ca.powf(p - 2.0);
    let f = sp + cp;
    let f1 = p * (s.signum() * sp1 * c - c.signum() * cp1 * s);
    let f2 = p * (((p - 1.0) * c * c - s * s) * sp2 + ((p - 1.0) * s * s - c * c) * cp2);
    (f, f1, f2)
}

fn lp_p(theta: f64, exponent: f64) -> (f64, f64, f64) {
    let (f, f1, f2) = lp_f(theta, exponent);
    let e = -1.0 / exponent;
    let v = f.powf(e);
    let dv = e * f.powf(e - 1.0) * f1;
    let d2v = e * ((e - 1.0) * f.powf(e - 2.0) * f1 * f1 + f.powf(e - 1.0) * f2);
    (v, dv, d2v)
}

fn lp_norm(v: Vec2, exponent: f64) -> f64 {
    (v.x.abs().powf(exponent) + v.y.abs().powf(exponent)).powf(1.0 / exponent)
}

/// Polar radius of the l_p unit circle with first and second derivatives.
/// Valid for any exponent > 1 (below 2 the derivatives blow up at the axes).
pub fn lp_polar(theta: f64, exponent: f64) -> (f64, f64, f64) {
    lp_p(theta, exponent)
}

impl ProfileEval {
    fn p(&self, theta: f64) -> f64 {
        match self {
            ProfileEval::Euclidean => 1.0,
            ProfileEval::Lp { exponent } => lp_p(theta, *exponent).0,
            ProfileEval::Analytic { p, .. } => p(theta),
            ProfileEval::Tabulated(sp) => sp.eval(theta),
        }
    }

    fn dp(&self, theta: f64) -> f64 {
        match self {
            ProfileEval::Euclidean => 0.0,
            ProfileEval::Lp { exponent } => lp_p(theta, *exponent).1,
            ProfileEval::Analytic { dp, .. } => dp(theta),
            ProfileEval::Tabulated(sp) => sp.deriv1(theta),
        }
    }

    fn d2p(&self, theta: f64) -> f64 {
        match self {
            ProfileEval::Euclidean => 0.0,
            ProfileEval::Lp { exponent } => lp_p(theta, *exponent).2,
            ProfileEval::Analytic { d2p, .. } => d2p(theta),
            ProfileEval::Tabulated(sp) => sp.deriv2(theta),
        }
    }
}

impl NormProfile {
    pub fn euclidean() -> NormProfile {
        Self::build(ProfileKind::Euclidean, ProfileEval::Euclidean, DEFAULT_GRID_N, 1.0)
            .expect("euclidean profile is always valid")
    }

    /// The usual l_p norm. Exponents below 2 are rejected: the unit circle is
    /// not C2 at the axes, which breaks every curvature formula downstream.
    /// For p > 2 the circle has flat points on the axes; operations dividing
    /// by the circle curvature flag those samples.
    pub fn lp(exponent: f64) -> Result<NormProfile> {
        if !(exponent >= 2.0) || !exponent.is_finite() {
            return Err(Error::InvalidProfile(format!(
                "l_p exponent must be >= 2 for curvature work, got {exponent}"
            )));
        }
        if (exponent - 2.0).abs() < 1e-12 {
            return Ok(Self::euclidean());
        }
        Self::build(
            ProfileKind::Lp { exponent },
            ProfileEval::Lp { exponent },
            DEFAULT_GRID_N,
            1.0,
        )
    }

    /// Custom profile from closed-form polar radius and derivatives.
    pub fn from_polar_fn(
        p: impl Fn(f64) -> f64 + Send + Sync + 'static,
        dp: impl Fn(f64) -> f64 + Send + Sync + 'static,
        d2p: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<NormProfile> {
        Self::build(
            ProfileKind::Custom,
            ProfileEval::Analytic {
                p: Arc::new(p),
                dp: Arc::new(dp),
                d2p: Arc::new(d2p),
            },
            DEFAULT_GRID_N,
            1.0,
        )
    }

    /// Custom profile from uniformly sampled polar radii over `[0, 2*pi)`.
    /// A periodic cubic spline supplies the C2 interpolant and derivatives.
    pub fn from_samples(p_values: Vec<f64>) -> Result<NormProfile> {
        if p_values.len() < 16 {
            return Err(Error::InvalidProfile(
                "tabulated profile needs at least 16 samples".into(),
            ));
        }
        if p_values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NotC2("non-finite radius sample".into()));
        }
        let n = p_values.len();
        let spline = PeriodicSpline::new(0.0, 2.0 * PI, p_values);
        Self::build(ProfileKind::Custom, ProfileEval::Tabulated(spline), n.max(256), 1.0)
    }

    /// Same profile with a different determinant scale.
    pub fn with_determinant_scale(&self, scale: f64) -> Result<NormProfile> {
        if !(scale > 0.0) {
            return Err(Error::InvalidProfile("determinant scale must be positive".into()));
        }
        Self::build(self.inner.kind.clone(), self.inner.eval.clone(), self.inner.grid_n, scale)
    }

    /// Same profile rebuilt at a different grid resolution.
    pub fn with_grid_n(&self, grid_n: usize) -> Result<NormProfile> {
        Self::build(
            self.inner.kind.clone(),
            self.inner.eval.clone(),
            grid_n.max(64),
            self.inner.det.scale,
        )
    }

    fn build(
        kind: ProfileKind,
        eval: ProfileEval,
        grid_n: usize,
        det_scale: f64,
    ) -> Result<NormProfile> {
        Self::build_impl(kind, eval, grid_n, det_scale, true)
    }

    fn build_impl(
        kind: ProfileKind,
        eval: ProfileEval,
        grid_n: usize,
        det_scale: f64,
        strict: bool,
    ) -> Result<NormProfile> {
        let det = DeterminantForm { scale: det_scale };
        // validation on the grid: positivity, origin symmetry, convexity.
        // Relaxed mode tolerates isolated second-derivative blow-ups (the
        // anti-circles of l_p norms with p > 2 have genuine curvature spikes
        // on the axes).
        let n = grid_n;
        let h = 2.0 * PI / n as f64;
        let mut kphi_max: f64 = 0.0;
        let mut hpp_max: f64 = 0.0;
        let mut kphi_all: Vec<f64> = Vec::with_capacity(n);
        let mut hpp_all: Vec<f64> = Vec::with_capacity(n);
        let mut singular = 0usize;
        for i in 0..n {
            let th = i as f64 * h;
            let p = eval.p(th);
            let dp = eval.dp(th);
            let d2p = eval.d2p(th);
            if !p.is_finite() || !dp.is_finite() {
                return Err(Error::NotC2(format!("non-finite profile data at theta={th:.6}")));
            }
            if p <= 0.0 {
                return Err(Error::InvalidProfile(format!(
                    "polar radius must be positive, p({th:.6}) = {p:.6}"
                )));
            }
            let sym = eval.p(th + PI);
            if (sym - p).abs() > 1e-6 * p.abs().max(1.0) {
                return Err(Error::InvalidProfile(format!(
                    "profile is not origin-symmetric at theta={th:.6}"
                )));
            }
            if !d2p.is_finite() {
                if strict {
                    return Err(Error::NotC2(format!(
                        "non-finite second derivative at theta={th:.6}"
                    )));
                }
                singular += 1;
                continue;
            }
            let numer = p * p + 2.0 * dp * dp - p * d2p;
            let denom = (p * p + dp * dp).powf(1.5);
            let kphi = numer / denom;
            if kphi < -1e-9 {
                return Err(Error::NonConvex(format!(
                    "unit circle curvature {kphi:.3e} < 0 at theta={th:.6}"
                )));
            }
            if kphi.is_finite() {
                kphi_max = kphi_max.max(kphi.abs());
                kphi_all.push(kphi.abs());
            }
            let hpp = numer / (p * p * p);
            if hpp.is_finite() {
                hpp_max = hpp_max.max(hpp.abs());
                hpp_all.push(hpp.abs());
            }
        }
        if singular > 8.max(n / 512) {
            return Err(Error::NotC2(format!(
                "{singular} singular profile samples of {n}"
            )));
        }
        // robust curvature scales: profiles with genuine spikes (fitted
        // anti-circles) have meaningless maxima, so cap at a multiple of the
        // median
        kphi_all.sort_by(f64::total_cmp);
        hpp_all.sort_by(f64::total_cmp);
        let kphi_scale = kphi_max.min(50.0 * kphi_all[kphi_all.len() / 2]);
        let hpp_scale = hpp_max.min(50.0 * hpp_all[hpp_all.len() / 2]);
        // isolated flat directions of the unit circle (zero curvature, e.g.
        // the axes of l_p circles with p > 2): grid nodes far below the
        // curvature scale, clustered to their centers
        let mut flat_dirs = Vec::new();
        {
            let thresh = 1e-3 * kphi_scale;
            let mut i = 0usize;
            while i < n {
                let th = i as f64 * h;
                let p = eval.p(th);
                let dp = eval.dp(th);
                let d2p = eval.d2p(th);
                let numer = p * p + 2.0 * dp * dp - p * d2p;
                let kphi = numer / (p * p + dp * dp).powf(1.5);
                if kphi.is_finite() && kphi.abs() < thresh {
                    // walk the cluster
                    let start = i;
                    let mut end = i;
                    while end + 1 < n {
                        let th2 = (end + 1) as f64 * h;
                        let p2 = eval.p(th2);
                        let dp2 = eval.dp(th2);
                        let d2p2 = eval.d2p(th2);
                        let nu = p2 * p2 + 2.0 * dp2 * dp2 - p2 * d2p2;
                        let k2 = nu / (p2 * p2 + dp2 * dp2).powf(1.5);
                        if k2.is_finite() && k2.abs() < thresh {
                            end += 1;
                        } else {
                            break;
                        }
                    }
                    flat_dirs.push(0.5 * (start + end) as f64 * h);
                    i = end + 1;
                } else {
                    i += 1;
                }
            }
        }

        // tangent-angle table of the unit circle
        let nodes: Vec<f64> = (0..=n).map(|i| i as f64 * h).collect();
        let mut angles: Vec<f64> = nodes
            .iter()
            .map(|&th| {
                let p = eval.p(th);
                let dp = eval.dp(th);
                let (s, c) = th.sin_cos();
                (dp * s + p * c).atan2(dp * c - p * s)
            })
            .collect();
        unwrap_angles(&mut angles);
        let wind = angles[n] - angles[0];
        // profiles with curvature spikes have Hoelder (not Lipschitz) polar
        // derivatives, which costs a few digits at the seam
        let wind_tol = if strict { 1e-6 } else { 1e-4 };
        if (wind - 2.0 * PI).abs() > wind_tol {
            return Err(Error::NonConvex(format!(
                "tangent of the unit circle winds by {wind:.6}, expected 2*pi"
            )));
        }
        // exact winding for table arithmetic
        angles[n] = angles[0] + 2.0 * PI;
        let rates: Vec<f64> = nodes
            .iter()
            .map(|&th| {
                let p = eval.p(th);
                let dp = eval.dp(th);
                let d2p = eval.d2p(th);
                let numer = p * p + 2.0 * dp * dp - p * d2p;
                (numer / (p * p + dp * dp)).max(0.0)
            })
            .collect();
        let tangent_forward = MonotoneCubic::with_slopes(nodes.clone(), angles.clone(), rates.clone());

        // cumulative tables on the unit circle
        let speed_norm = |th: f64| {
            let p = eval.p(th);
            let dp = eval.dp(th);
            let (s, c) = th.sin_cos();
            let v = Vec2::new(dp * c - p * s, dp * s + p * c);
            let dir = v.angle();
            v.norm_e() / eval.p(dir)
        };
        let speed_anti = |th: f64| {
            let p = eval.p(th);
            det_scale * p * p
        };
        let speed_eucl = |th: f64| {
            let p = eval.p(th);
            let dp = eval.dp(th);
            (p * p + dp * dp).sqrt()
        };
        let s_col = cumulative_integral(speed_norm, 0.0, 2.0 * PI, n);
        let u_col = cumulative_integral(speed_anti, 0.0, 2.0 * PI, n);
        let se_col = cumulative_integral(speed_eucl, 0.0, 2.0 * PI, n);
        let circle = ParamTable::from_columns(
            nodes.clone(),
            s_col,
            nodes.iter().map(|&t| speed_norm(t)).collect(),
            u_col,
            nodes.iter().map(|&t| speed_anti(t)).collect(),
            se_col,
            nodes.iter().map(|&t| speed_eucl(t)).collect(),
            angles.clone(),
            rates,
        );

        // polar radius of the unit anti-circle (scale 1)
        let anti_radius = match &eval {
            ProfileEval::Euclidean => AntiRadius::One,
            ProfileEval::Lp { exponent } => AntiRadius::LpConjugate {
                exponent: exponent / (exponent - 1.0),
            },
            _ => {
                // sample psi, convert to polar form, resample uniformly;
                // dense sampling keeps the fit accurate when the anti-circle
                // has curvature spikes (conjugate profiles of l_p norms)
                let m = (4 * n).max(4096);
                let hm = 2.0 * PI / m as f64;
                let mut alphas = Vec::with_capacity(m + 1);
                let mut radii = Vec::with_capacity(m + 1);
                for j in 0..=m {
                    let th = j as f64 * hm;
                    let p = eval.p(th);
                    let dp = eval.dp(th);
                    let hval = 1.0 / p;
                    let hder = -dp / (p * p);
                    let (s, c) = th.sin_cos();
                    let psi = Vec2::new(hder * c + hval * s, hder * s - hval * c);
                    alphas.push(psi.angle());
                    radii.push(psi.norm_e());
                }
                unwrap_angles(&mut alphas);
                let pchip = MonotoneCubic::fritsch_carlson(alphas.clone(), radii);
                let a0 = alphas[0];
                let vals: Vec<f64> = (0..m)
                    .map(|j| pchip.eval(a0 + j as f64 * hm))
                    .collect();
                AntiRadius::Spline(PeriodicSpline::new(a0, 2.0 * PI, vals))
            }
        };

        Ok(NormProfile {
            inner: Arc::new(ProfileInner {
                kind,
                grid_n,
                det,
                eval,
                tangent_nodes: nodes,
                tangent_angles: angles,
                tangent_forward,
                circle,
                anti_radius,
                kphi_max,
                hpp_max,
                kphi_scale,
                hpp_scale,
                flat_dirs,
            }),
        })
    }

    pub fn kind(&self) -> &ProfileKind {
        &self.inner.kind
    }

    pub fn grid_n(&self) -> usize {
        self.inner.grid_n
    }

    pub fn determinant(&self) -> DeterminantForm {
        self.inner.det
    }

    /// `[x, y]` under the profile's determinant form.
    #[inline]
    pub fn det_form(&self, a: Vec2, b: Vec2) -> f64 {
        self.inner.det.apply(a, b)
    }

    /// Polar radius of the unit circle.
    #[inline]
    pub fn p(&self, theta: f64) -> f64 {
        self.inner.eval.p(theta)
    }

    #[inline]
    pub fn dp(&self, theta: f64) -> f64 {
        self.inner.eval.dp(theta)
    }

    #[inline]
    pub fn d2p(&self, theta: f64) -> f64 {
        self.inner.eval.d2p(theta)
    }

    /// Point of the unit circle at polar angle `theta`.
    pub fn phi(&self, theta: f64) -> Vec2 {
        self.p(theta) * Vec2::from_angle(theta)
    }

    /// Derivative of `phi` with respect to the polar angle.
    pub fn dphi(&self, theta: f64) -> Vec2 {
        let p = self.p(theta);
        let dp = self.dp(theta);
        let (s, c) = theta.sin_cos();
        Vec2::new(dp * c - p * s, dp * s + p * c)
    }

    pub fn d2phi(&self, theta: f64) -> Vec2 {
        let p = self.p(theta);
        let dp = self.dp(theta);
        let d2p = self.d2p(theta);
        let (s, c) = theta.sin_cos();
        Vec2::new((d2p - p) * c - 2.0 * dp * s, (d2p - p) * s + 2.0 * dp * c)
    }

    /// Euclidean curvature of the unit circle at polar angle `theta`.
    pub fn kphi_polar(&self, theta: f64) -> f64 {
        let p = self.p(theta);
        let dp = self.dp(theta);
        let d2p = self.d2p(theta);
        (p * p + 2.0 * dp * dp - p * d2p) / (p * p + dp * dp).powf(1.5)
    }

    /// Largest unit-circle curvature seen on the grid.
    pub fn kphi_max(&self) -> f64 {
        self.inner.kphi_max
    }

    /// Largest value of `h'' + h` (reciprocal anti-circle curvature) on the
    /// grid.
    pub fn hpp_max(&self) -> f64 {
        self.inner.hpp_max
    }

    /// Robust scale of the unit-circle curvature for flat-point guards: the
    /// grid maximum capped at 50x the median, so curvature spikes of fitted
    /// anti-circles do not inflate the guard.
    pub fn kphi_guard_scale(&self) -> f64 {
        self.inner.kphi_scale
    }

    /// Robust scale of `h'' + h` for the mirror guard.
    pub fn hpp_guard_scale(&self) -> f64 {
        self.inner.hpp_scale
    }

    /// Isolated flat directions of the unit circle in `[0, 2*pi)` (polar
    /// angles where the circle's Euclidean curvature vanishes). Empty for
    /// uniformly convex profiles.
    pub fn flat_directions(&self) -> &[f64] {
        &self.inner.flat_dirs
    }

    /// Does the closed angle interval `[a, b]` (or `[b, a]`) contain a flat
    /// direction of the unit circle, modulo 2*pi?
    pub fn sweeps_flat_direction(&self, a: f64, b: f64) -> bool {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let mid = 0.5 * (lo + hi);
        for &f in self.flat_directions() {
            let shifted = f + ((mid - f) / (2.0 * PI)).round() * 2.0 * PI;
            if shifted >= lo && shifted <= hi {
                return true;
            }
        }
        false
    }

    /// `h'' + h` for `h = 1/p`, evaluated at tangent direction `beta`.
    /// This is the reciprocal Euclidean curvature of the anti-circle at the
    /// point where its tangent is parallel to `(cos beta, sin beta)`.
    pub fn hpp_plus_h(&self, beta: f64) -> f64 {
        let p = self.p(beta);
        let dp = self.dp(beta);
        let d2p = self.d2p(beta);
        (p * p + 2.0 * dp * dp - p * d2p) / (p * p * p)
    }

    /// The norm itself.
    pub fn norm_eval(&self, v: Vec2) -> f64 {
        let r = v.norm_e();
        if r == 0.0 {
            return 0.0;
        }
        r / self.p(v.angle())
    }

    /// The anti-norm `sup { |[x, y]| : y in S }`.
    pub fn anti_norm_eval(&self, v: Vec2) -> f64 {
        let r = v.norm_e();
        if r == 0.0 {
            return 0.0;
        }
        let base = match &self.inner.anti_radius {
            AntiRadius::One => r,
            AntiRadius::LpConjugate { exponent } => lp_norm(v, *exponent),
            AntiRadius::Spline(sp) => r / sp.eval(v.angle()),
        };
        self.inner.det.scale * base
    }

    /// Polar radius of the unit anti-circle in direction `alpha`.
    pub fn anti_radius(&self, alpha: f64) -> f64 {
        let u = Vec2::from_angle(alpha);
        1.0 / self.anti_norm_eval(u)
    }

    /// Polar radius of the scale-1 anti-circle and its angular derivative.
    pub fn anti_radius_d(&self, alpha: f64) -> (f64, f64) {
        match &self.inner.anti_radius {
            AntiRadius::One => (1.0, 0.0),
            AntiRadius::LpConjugate { exponent } => {
                let (q, dq, _) = lp_p(alpha, *exponent);
                (q, dq)
            }
            AntiRadius::Spline(sp) => (sp.eval(alpha), sp.deriv1(alpha)),
        }
    }

    /// Point of the anti-circle in the support-style parametrization: the
    /// tangent of the anti-circle at `psi(theta)` is parallel to
    /// `(cos theta, sin theta)`.
    pub fn psi(&self, theta: f64) -> Vec2 {
        let p = self.p(theta);
        let dp = self.dp(theta);
        let hval = 1.0 / p;
        let hder = -dp / (p * p);
        let (s, c) = theta.sin_cos();
        Vec2::new(hder * c + hval * s, hder * s - hval * c) / self.inner.det.scale
    }

    /// Right normal of a unit-speed curve whose tangent points in direction
    /// `beta`: the unique vector with `tangent -| n` (Birkhoff) and
    /// `[tangent, n] = 1`.
    pub fn right_normal(&self, beta: f64) -> Vec2 {
        -self.psi(beta)
    }

    /// Euclidean support function of the unit ball in direction `alpha`.
    pub fn euclid_support(&self, alpha: f64) -> f64 {
        // support point of a convex curve: tangent direction alpha + pi/2
        let tau = self.tangent_param(alpha + 0.5 * PI);
        self.phi(tau).dot(Vec2::from_angle(alpha))
    }

    /// Euclidean support function of the anti-ball in direction `alpha`.
    pub fn euclid_support_anti(&self, alpha: f64) -> f64 {
        1.0 / (self.p(alpha + 0.5 * PI) * self.inner.det.scale)
    }

    /// Is `x` Birkhoff orthogonal to `y` within angular tolerance `tol`?
    /// True when the supporting line of the unit ball at `x/||x||` is
    /// parallel to `y`.
    pub fn birkhoff_orthogonal(&self, x: Vec2, y: Vec2, tol: f64) -> Result<bool> {
        if x.norm_e() == 0.0 || y.norm_e() == 0.0 {
            return Err(Error::ZeroVector);
        }
        let tangent = self.dphi(x.angle());
        let sin_angle = tangent.det(y).abs() / (tangent.norm_e() * y.norm_e());
        Ok(sin_angle <= tol)
    }

    /// Polar parameter of the unit circle where the tangent points in
    /// direction `beta` (mod 2*pi). Seeded by the tangent-angle table and
    /// refined by bisection on the exact tangent angle.
    pub fn tangent_param(&self, beta: f64) -> f64 {
        let inner = &self.inner;
        let g0 = inner.tangent_angles[0];
        let mut target = (beta - g0).rem_euclid(2.0 * PI) + g0;
        // guard against rem_euclid returning exactly 2*pi-equivalent
        if target >= g0 + 2.0 * PI {
            target = g0;
        }
        let angles = &inner.tangent_angles;
        let nodes = &inner.tangent_nodes;
        // binary search for the bracketing cell
        let mut lo = 0;
        let mut hi = angles.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if angles[mid] <= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let (tau_lo, tau_hi) = (nodes[lo], nodes[hi]);
        // exact tangent-angle deviation, continuous inside the cell
        let delta = |tau: f64| {
            let v = self.dphi(tau);
            let mut d = v.angle() - target;
            while d > PI {
                d -= 2.0 * PI;
            }
            while d < -PI {
                d += 2.0 * PI;
            }
            d
        };
        let d_lo = delta(tau_lo);
        let d_hi = delta(tau_hi);
        if d_lo == 0.0 {
            return tau_lo;
        }
        if d_hi == 0.0 || d_lo.signum() == d_hi.signum() {
            // flat cell or numerically identical endpoints: fall back to the
            // table interpolant
            let t = if angles[hi] > angles[lo] {
                tau_lo + (tau_hi - tau_lo) * (target - angles[lo]) / (angles[hi] - angles[lo])
            } else {
                0.5 * (tau_lo + tau_hi)
            };
            return t;
        }
        bisect(delta, tau_lo, tau_hi, 1e-14)
    }

    /// Unwrapped tangent angle of the unit circle at polar parameter `tau`.
    pub fn tangent_angle(&self, tau: f64) -> f64 {
        let wraps = (tau / (2.0 * PI)).floor();
        let t = tau - wraps * 2.0 * PI;
        self.inner.tangent_forward.eval(t) + wraps * 2.0 * PI
    }

    /// Euclidean curvature of the unit circle at the point where its tangent
    /// points in direction `beta`.
    pub fn kphi_at_tangent(&self, beta: f64) -> f64 {
        self.kphi_polar(self.tangent_param(beta))
    }

    /// Minkowski arc-length position on the unit circle of the point whose
    /// tangent points in direction `beta` (the alignment parameter `t(s)`).
    pub fn circle_arc_at_tangent(&self, beta: f64) -> f64 {
        let tau = self.tangent_param(beta);
        self.inner.circle.forward(Column::Norm, tau)
    }

    /// The parametrization tables of the unit circle: polar angle against
    /// Minkowski arc length, twice sector area (= anti-norm arc length) and
    /// Euclidean arc length.
    pub fn circle_tables(&self) -> &ParamTable {
        &self.inner.circle
    }

    /// Minkowski length of the unit circle.
    pub fn circle_length(&self) -> f64 {
        self.inner.circle.total(Column::Norm)
    }

    /// Twice the area of the unit ball under the determinant's area measure.
    pub fn ball_area_x2(&self) -> f64 {
        self.inner.circle.total(Column::AntiNorm)
    }

    /// Radon test: after the optimal determinant rescaling, does the
    /// anti-norm agree with the norm on the unit circle within `tol`?
    pub fn is_radon(&self, tol: f64) -> RadonReport {
        let n = self.inner.grid_n;
        let mut rmin = f64::INFINITY;
        let mut rmax = f64::NEG_INFINITY;
        for i in 0..n {
            let th = i as f64 * 2.0 * PI / n as f64;
            let r = self.anti_norm_eval(self.phi(th)) / self.inner.det.scale;
            rmin = rmin.min(r);
            rmax = rmax.max(r);
        }
        // deviation of sigma*r from 1 is minimized by sigma = 2/(rmin+rmax)
        let scale = 2.0 / (rmin + rmax);
        let deviation = (rmax - rmin) / (rmax + rmin);
        RadonReport {
            radon: deviation <= tol,
            deviation,
            scale,
        }
    }

    /// The anti-circle as first-class data: its tangent-aligned
    /// parametrization `psi`, its support function, and its polar radius.
    pub fn anti_profile(&self) -> AntiProfile {
        AntiProfile {
            profile: self.clone(),
        }
    }

    /// The anti-norm as a full `NormProfile`, so every curvature operation
    /// can be re-run in the anti-norm.
    ///
    /// Euclidean and l_p norms use the exact conjugate-exponent closed form
    /// (the anti-circle of l_p is the l_q circle, invariant under the quarter
    /// rotation). Custom profiles are fitted: psi is sampled, converted to a
    /// polar radius and interpolated by a periodic spline; the fit is
    /// validated against `anti_norm_eval` and rejected above `fit_tol`.
    pub fn anti_as_norm_profile(&self, fit_tol: f64) -> Result<NormProfile> {
        let sigma = self.inner.det.scale;
        let fitted = match &self.inner.kind {
            ProfileKind::Euclidean => {
                if (sigma - 1.0).abs() < 1e-15 {
                    NormProfile::euclidean()
                } else {
                    // anti-circle has radius 1/sigma; the determinant form
                    // stays the same, so the scale carries over
                    NormProfile::from_polar_fn(move |_| 1.0 / sigma, |_| 0.0, |_| 0.0)?
                        .with_determinant_scale(sigma)?
                }
            }
            ProfileKind::Lp { exponent } => {
                let q = exponent / (exponent - 1.0);
                // the conjugate circle has curvature spikes for exponent > 2;
                // relaxed construction flags those isolated samples
                Self::build_impl(
                    ProfileKind::Custom,
                    ProfileEval::Analytic {
                        p: Arc::new(move |th| lp_p(th, q).0 / sigma),
                        dp: Arc::new(move |th| lp_p(th, q).1 / sigma),
                        d2p: Arc::new(move |th| lp_p(th, q).2 / sigma),
                    },
                    self.inner.grid_n,
                    self.inner.det.scale,
                    false,
                )?
            }
            ProfileKind::Custom => {
                let m = self.inner.grid_n;
                let hm = 2.0 * PI / m as f64;
                let mut alphas = Vec::with_capacity(m + 1);
                let mut radii = Vec::with_capacity(m + 1);
                for j in 0..=m {
                    let th = j as f64 * hm;
                    let psi = self.psi(th);
                    alphas.push(psi.angle());
                    radii.push(psi.norm_e());
                }
                unwrap_angles(&mut alphas);
                let pchip = MonotoneCubic::fritsch_carlson(alphas.clone(), radii);
                let a0 = alphas[0];
                // resample on a uniform grid starting at alpha = 0, wrapping
                // each query into the sampled branch
                let vals: Vec<f64> = (0..m)
                    .map(|j| {
                        let a = a0 + (j as f64 * hm - a0).rem_euclid(2.0 * PI);
                        pchip.eval(a)
                    })
                    .collect();
                NormProfile::from_samples(vals)?.with_determinant_scale(sigma)?
            }
        };
        // validate: points of the fitted unit circle must be unit in the
        // anti-norm
        let mut worst: f64 = 0.0;
        for i in 0..256 {
            let th = i as f64 * 2.0 * PI / 256.0;
            let dev = (self.anti_norm_eval(fitted.phi(th)) - 1.0).abs();
            worst = worst.max(dev);
        }
        if worst > fit_tol {
            return Err(Error::AntiProfileFit(worst));
        }
        Ok(fitted)
    }

    /// Serializable description.
    pub fn to_spec(&self) -> NormProfileSpec {
        match &self.inner.kind {
            ProfileKind::Euclidean => NormProfileSpec::Euclidean,
            ProfileKind::Lp { exponent } => NormProfileSpec::Lp { exponent: *exponent },
            ProfileKind::Custom => {
                let n = self.inner.grid_n;
                let theta: Vec<f64> = (0..n).map(|i| i as f64 * 2.0 * PI / n as f64).collect();
                let p = theta.iter().map(|&t| self.p(t)).collect();
                NormProfileSpec::Custom {
                    theta: Some(theta),
                    p,
                }
            }
        }
    }

    pub fn from_spec(spec: &NormProfileSpec) -> Result<NormProfile> {
        match spec {
            NormProfileSpec::Euclidean => Ok(NormProfile::euclidean()),
            NormProfileSpec::Lp { exponent } => NormProfile::lp(*exponent),
            NormProfileSpec::Custom { theta, p } => {
                if let Some(theta) = theta {
                    if theta.len() != p.len() {
                        return Err(Error::InvalidProfile(
                            "theta and p arrays must have equal length".into(),
                        ));
                    }
                    let n = theta.len();
                    let h = 2.0 * PI / n as f64;
                    for (i, &t) in theta.iter().enumerate() {
                        if (t - i as f64 * h).abs() > 1e-9 {
                            return Err(Error::InvalidProfile(
                                "custom profile requires a uniform theta grid over [0, 2*pi)".into(),
                            ));
                        }
                    }
                }
                NormProfile::from_samples(p.clone())
            }
        }
    }
}

/// JSON schema for norm profiles.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum NormProfileSpec {
    Euclidean,
    Lp { exponent: f64 },
    Custom {
        #[serde(skip_serializing_if = "Option::is_none")]
        theta: Option<Vec<f64>>,
        p: Vec<f64>,
    },
}

/// Result of the Radon-plane probe.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RadonReport {
    pub radon: bool,
    /// Smallest achievable sup deviation of the rescaled anti-norm from the
    /// norm on the unit circle.
    pub deviation: f64,
    /// The optimal determinant scale.
    pub scale: f64,
}

/// The unit anti-circle of a norm.
pub struct AntiProfile {
    profile: NormProfile,
}

impl AntiProfile {
    /// Tangent-aligned parametrization of the anti-circle; the tangent at
    /// `psi(theta)` is parallel to `(cos theta, sin theta)`.
    pub fn psi(&self, theta: f64) -> Vec2 {
        self.profile.psi(theta)
    }

    /// Euclidean support function of the anti-circle.
    pub fn h_psi(&self, theta: f64) -> f64 {
        self.profile.euclid_support_anti(theta)
    }

    /// Polar radius of the anti-circle.
    pub fn q(&self, alpha: f64) -> f64 {
        self.profile.anti_radius(alpha)
    }

    /// The anti-norm as a full profile (see
    /// [`NormProfile::anti_as_norm_profile`]).
    pub fn as_norm_profile(&self, fit_tol: f64) -> Result<NormProfile> {
        self.profile.anti_as_norm_profile(fit_tol)
    }
}
