//! Parameter correspondence tables.
//!
//! A [`ParamTable`] records, over a common grid of the source parameter, the
//! cumulative Minkowski arc length, anti-norm arc length, Euclidean arc
//! length, and the unwrapped tangent angle. Each monotone column carries
//! exact node slopes (the respective speeds), so forward and inverse lookups
//! are cubic Hermite interpolants that compose to the identity to high
//! accuracy.

use crate::interp::MonotoneCubic;

/// Which cumulative column of a [`ParamTable`] to address.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    /// Minkowski arc length `s`.
    Norm,
    /// Anti-norm arc length `s_a` (twice the sector area for the unit circle).
    AntiNorm,
    /// Euclidean arc length `s_e`.
    Euclidean,
    /// Unwrapped tangent angle (only monotone for strictly convex curves).
    TangentAngle,
}

#[derive(Debug, Clone)]
pub struct ParamTable {
    /// Source parameter breakpoints.
    pub t: Vec<f64>,
    /// Cumulative Minkowski arc length at the breakpoints.
    pub s: Vec<f64>,
    /// Cumulative anti-norm arc length at the breakpoints.
    pub s_a: Vec<f64>,
    /// Cumulative Euclidean arc length at the breakpoints.
    pub s_e: Vec<f64>,
    /// Unwrapped tangent angle at the breakpoints.
    pub theta_tan: Vec<f64>,
    forward_s: MonotoneCubic,
    forward_sa: MonotoneCubic,
    forward_se: MonotoneCubic,
    forward_theta: Option<MonotoneCubic>,
    inverse_s: MonotoneCubic,
    inverse_sa: MonotoneCubic,
    inverse_se: MonotoneCubic,
    inverse_theta: Option<MonotoneCubic>,
}

impl ParamTable {
    /// Builds a table from sampled speeds and tangent angles.
    ///
    /// `t` must be strictly increasing. `speed_*` are the respective
    /// parametric speeds at the breakpoints; cumulative columns are supplied
    /// by the caller (one Simpson panel per step keeps them consistent with
    /// the speeds used as Hermite slopes). `theta_tan` must already be
    /// unwrapped; it participates in inversion only when strictly monotone.
    #[allow(clippy::too_many_arguments)]
    pub fn from_columns(
        t: Vec<f64>,
        s: Vec<f64>,
        speed_s: Vec<f64>,
        s_a: Vec<f64>,
        speed_sa: Vec<f64>,
        s_e: Vec<f64>,
        speed_se: Vec<f64>,
        theta_tan: Vec<f64>,
        theta_rate: Vec<f64>,
    ) -> ParamTable {
        let forward_s = MonotoneCubic::with_slopes(t.clone(), s.clone(), speed_s.clone());
        let forward_sa = MonotoneCubic::with_slopes(t.clone(), s_a.clone(), speed_sa.clone());
        let forward_se = MonotoneCubic::with_slopes(t.clone(), s_e.clone(), speed_se.clone());
        let inverse_s = MonotoneCubic::with_slopes(
            s.clone(),
            t.clone(),
            speed_s.iter().map(|v| 1.0 / v).collect(),
        );
        let inverse_sa = MonotoneCubic::with_slopes(
            s_a.clone(),
            t.clone(),
            speed_sa.iter().map(|v| 1.0 / v).collect(),
        );
        let inverse_se = MonotoneCubic::with_slopes(
            s_e.clone(),
            t.clone(),
            speed_se.iter().map(|v| 1.0 / v).collect(),
        );
        let strictly_monotone = theta_tan.windows(2).all(|w| w[1] > w[0]);
        let (forward_theta, inverse_theta) = if strictly_monotone {
            let fwd =
                MonotoneCubic::with_slopes(t.clone(), theta_tan.clone(), theta_rate.clone());
            let inv = MonotoneCubic::with_slopes(
                theta_tan.clone(),
                t.clone(),
                theta_rate
                    .iter()
                    .map(|v| if *v > 0.0 { 1.0 / v } else { 0.0 })
                    .collect(),
            );
            (Some(fwd), Some(inv))
        } else {
            (None, None)
        };
        ParamTable {
            t,
            s,
            s_a,
            s_e,
            theta_tan,
            forward_s,
            forward_sa,
            forward_se,
            forward_theta,
            inverse_s,
            inverse_sa,
            inverse_se,
            inverse_theta,
        }
    }

    pub fn total(&self, col: Column) -> f64 {
        match col {
            Column::Norm => *self.s.last().unwrap(),
            Column::AntiNorm => *self.s_a.last().unwrap(),
            Column::Euclidean => *self.s_e.last().unwrap(),
            Column::TangentAngle => self.theta_tan.last().unwrap() - self.theta_tan[0],
        }
    }

    /// Source parameter -> cumulative value.
    pub fn forward(&self, col: Column, t: f64) -> f64 {
        match col {
            Column::Norm => self.forward_s.eval(t),
            Column::AntiNorm => self.forward_sa.eval(t),
            Column::Euclidean => self.forward_se.eval(t),
            Column::TangentAngle => self
                .forward_theta
                .as_ref()
                .expect("tangent angle is not monotone on this curve")
                .eval(t),
        }
    }

    /// Cumulative value -> source parameter.
    pub fn inverse(&self, col: Column, value: f64) -> f64 {
        match col {
            Column::Norm => self.inverse_s.eval(value),
            Column::AntiNorm => self.inverse_sa.eval(value),
            Column::Euclidean => self.inverse_se.eval(value),
            Column::TangentAngle => self
                .inverse_theta
                .as_ref()
                .expect("tangent angle is not monotone on this curve")
                .eval(value),
        }
    }

    pub fn has_tangent_column(&self) -> bool {
        self.forward_theta.is_some()
    }
}
