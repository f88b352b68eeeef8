//! Monotone cubic Hermite interpolation on increasing knots.
//!
//! Used for parameter correspondence tables. Slopes may be supplied exactly
//! (when the derivative of the tabulated quantity is known, e.g. a speed) or
//! estimated with the Fritsch-Carlson scheme; either way a safeguard keeps
//! the interpolant monotone so inverse lookups stay well defined.

#[derive(Debug, Clone)]
pub struct MonotoneCubic {
    xs: Vec<f64>,
    ys: Vec<f64>,
    slopes: Vec<f64>,
}

impl MonotoneCubic {
    /// Interpolant with exact node slopes, safeguarded into the monotone
    /// region.
    pub fn with_slopes(xs: Vec<f64>, ys: Vec<f64>, mut slopes: Vec<f64>) -> Self {
        assert!(xs.len() == ys.len() && xs.len() == slopes.len());
        assert!(xs.len() >= 2);
        safeguard(&xs, &ys, &mut slopes);
        MonotoneCubic { xs, ys, slopes }
    }

    /// Fritsch-Carlson slope estimation from the data alone.
    pub fn fritsch_carlson(xs: Vec<f64>, ys: Vec<f64>) -> Self {
        let n = xs.len();
        assert!(n >= 2 && ys.len() == n);
        let mut d = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            d.push((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]));
        }
        let mut m = vec![0.0; n];
        m[0] = d[0];
        m[n - 1] = d[n - 2];
        for i in 1..n - 1 {
            if d[i - 1] * d[i] <= 0.0 {
                m[i] = 0.0;
            } else {
                let h0 = xs[i] - xs[i - 1];
                let h1 = xs[i + 1] - xs[i];
                let w1 = 2.0 * h1 + h0;
                let w2 = h1 + 2.0 * h0;
                m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
            }
        }
        let mut slopes = m;
        safeguard(&xs, &ys, &mut slopes);
        MonotoneCubic { xs, ys, slopes }
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.xs[0], *self.xs.last().unwrap())
    }

    fn segment(&self, x: f64) -> usize {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return 0;
        }
        if x >= self.xs[n - 1] {
            return n - 2;
        }
        let mut lo = 0;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.xs[mid] <= x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    pub fn eval(&self, x: f64) -> f64 {
        let i = self.segment(x);
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        self.ys[i] * h00 + h * self.slopes[i] * h10 + self.ys[i + 1] * h01 + h * self.slopes[i + 1] * h11
    }

    pub fn deriv1(&self, x: f64) -> f64 {
        let i = self.segment(x);
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let t2 = t * t;
        let d00 = 6.0 * t2 - 6.0 * t;
        let d10 = 3.0 * t2 - 4.0 * t + 1.0;
        let d01 = -6.0 * t2 + 6.0 * t;
        let d11 = 3.0 * t2 - 2.0 * t;
        (self.ys[i] * d00 + h * self.slopes[i] * d10 + self.ys[i + 1] * d01
            + h * self.slopes[i + 1] * d11)
            / h
    }
}

/// Plain cubic Hermite interpolant on a uniform grid with exact node slopes
/// (no monotonicity safeguard; used for ODE trajectories).
#[derive(Debug, Clone)]
pub struct UniformHermite {
    x0: f64,
    h: f64,
    ys: Vec<f64>,
    slopes: Vec<f64>,
}

impl UniformHermite {
    pub fn new(x0: f64, h: f64, ys: Vec<f64>, slopes: Vec<f64>) -> Self {
        assert!(ys.len() == slopes.len() && ys.len() >= 2);
        UniformHermite { x0, h, ys, slopes }
    }

    fn segment(&self, x: f64) -> (usize, f64) {
        let n = self.ys.len() - 1;
        let mut i = ((x - self.x0) / self.h).floor() as isize;
        if i < 0 {
            i = 0;
        }
        let i = (i as usize).min(n - 1);
        (i, (x - self.x0 - i as f64 * self.h) / self.h)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let (i, t) = self.segment(x);
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        self.ys[i] * h00
            + self.h * self.slopes[i] * h10
            + self.ys[i + 1] * h01
            + self.h * self.slopes[i + 1] * h11
    }
}

/// Clamp slopes into the Fritsch-Carlson monotone region of each interval.
fn safeguard(xs: &[f64], ys: &[f64], slopes: &mut [f64]) {
    let n = xs.len();
    for i in 0..n - 1 {
        let d = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        if d == 0.0 {
            slopes[i] = 0.0;
            slopes[i + 1] = 0.0;
            continue;
        }
        // slopes of the wrong sign break monotonicity immediately
        if slopes[i] * d < 0.0 {
            slopes[i] = 0.0;
        }
        if slopes[i + 1] * d < 0.0 {
            slopes[i + 1] = 0.0;
        }
        let cap = 3.0 * d.abs();
        if slopes[i].abs() > cap {
            slopes[i] = cap * slopes[i].signum();
        }
        if slopes[i + 1].abs() > cap {
            slopes[i + 1] = cap * slopes[i + 1].signum();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_slopes_reproduce_smooth_function() {
        let f = |x: f64| (x + 0.3).ln();
        let df = |x: f64| 1.0 / (x + 0.3);
        let xs: Vec<f64> = (0..=100).map(|i| i as f64 / 50.0).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        let ms: Vec<f64> = xs.iter().map(|&x| df(x)).collect();
        let interp = MonotoneCubic::with_slopes(xs, ys, ms);
        for &x in &[0.013, 0.77, 1.5, 1.99] {
            assert!((interp.eval(x) - f(x)).abs() < 1e-6);
        }
    }

    #[test]
    fn fritsch_carlson_is_monotone_on_monotone_data() {
        let xs: Vec<f64> = (0..=20).map(|i| i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| x.sqrt()).collect();
        let interp = MonotoneCubic::fritsch_carlson(xs, ys);
        let mut prev = f64::NEG_INFINITY;
        for i in 0..=2000 {
            let v = interp.eval(i as f64 * 0.01);
            assert!(v >= prev - 1e-12);
            prev = v;
        }
    }
}
