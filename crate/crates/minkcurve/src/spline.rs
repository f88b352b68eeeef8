//! Cubic spline interpolation: periodic (uniform knots) and natural/clamped
//! (arbitrary knots). Both expose value, first and second derivative.

/// Periodic C² cubic spline on uniform knots. `values[i]` is the sample at
/// `x0 + i*h` with `h = period / values.len()`; the interpolant wraps around.
#[derive(Debug, Clone)]
pub struct PeriodicSpline {
    x0: f64,
    period: f64,
    h: f64,
    values: Vec<f64>,
    // second derivatives at the knots
    m: Vec<f64>,
}

impl PeriodicSpline {
    pub fn new(x0: f64, period: f64, values: Vec<f64>) -> Self {
        let n = values.len();
        assert!(n >= 3, "periodic spline needs at least 3 samples");
        let h = period / n as f64;
        let m = solve_cyclic_second_derivs(&values, h);
        PeriodicSpline {
            x0,
            period,
            h,
            values,
            m,
        }
    }

    #[inline]
    fn locate(&self, x: f64) -> (usize, f64) {
        let mut t = (x - self.x0) % self.period;
        if t < 0.0 {
            t += self.period;
        }
        let mut i = (t / self.h) as usize;
        if i >= self.values.len() {
            i = self.values.len() - 1;
        }
        (i, t - i as f64 * self.h)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let (i, dx) = self.locate(x);
        let n = self.values.len();
        let j = (i + 1) % n;
        let h = self.h;
        let a = h - dx;
        let (yi, yj, mi, mj) = (self.values[i], self.values[j], self.m[i], self.m[j]);
        mi * a * a * a / (6.0 * h)
            + mj * dx * dx * dx / (6.0 * h)
            + (yi / h - mi * h / 6.0) * a
            + (yj / h - mj * h / 6.0) * dx
    }

    pub fn deriv1(&self, x: f64) -> f64 {
        let (i, dx) = self.locate(x);
        let n = self.values.len();
        let j = (i + 1) % n;
        let h = self.h;
        let a = h - dx;
        let (yi, yj, mi, mj) = (self.values[i], self.values[j], self.m[i], self.m[j]);
        -mi * a * a / (2.0 * h) + mj * dx * dx / (2.0 * h) - (yi / h - mi * h / 6.0)
            + (yj / h - mj * h / 6.0)
    }

    pub fn deriv2(&self, x: f64) -> f64 {
        let (i, dx) = self.locate(x);
        let n = self.values.len();
        let j = (i + 1) % n;
        let h = self.h;
        self.m[i] * (h - dx) / h + self.m[j] * dx / h
    }

    /// Piecewise-constant third derivative.
    pub fn deriv3(&self, x: f64) -> f64 {
        let (i, _) = self.locate(x);
        let n = self.values.len();
        let j = (i + 1) % n;
        (self.m[j] - self.m[i]) / self.h
    }
}

/// Cyclic tridiagonal system for periodic spline second derivatives,
/// solved with the Sherman-Morrison correction.
fn solve_cyclic_second_derivs(y: &[f64], h: f64) -> Vec<f64> {
    let n = y.len();
    let rhs: Vec<f64> = (0..n)
        .map(|i| {
            let prev = y[(i + n - 1) % n];
            let next = y[(i + 1) % n];
            6.0 * (prev - 2.0 * y[i] + next) / (h * h)
        })
        .collect();
    // System: m[i-1] + 4 m[i] + m[i+1] = rhs[i], cyclic.
    let diag = 4.0;
    let gamma = -diag;
    // Modified system per Sherman-Morrison: subtract gamma from first diag
    // entry and (off*off/gamma) from the last.
    let mut a = vec![diag; n];
    a[0] = diag - gamma;
    a[n - 1] = diag - 1.0 / gamma;
    let x = solve_tridiag_const(&a, 1.0, &rhs);
    let mut u = vec![0.0; n];
    u[0] = gamma;
    u[n - 1] = 1.0;
    let z = solve_tridiag_const(&a, 1.0, &u);
    let fact = (x[0] + x[n - 1] / gamma) / (1.0 + z[0] + z[n - 1] / gamma);
    (0..n).map(|i| x[i] - fact * z[i]).collect()
}

/// Thomas algorithm for a tridiagonal system with variable diagonal `a` and
/// constant off-diagonals `off`.
fn solve_tridiag_const(a: &[f64], off: f64, rhs: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    c[0] = off / a[0];
    d[0] = rhs[0] / a[0];
    for i in 1..n {
        let m = a[i] - off * c[i - 1];
        c[i] = off / m;
        d[i] = (rhs[i] - off * d[i - 1]) / m;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    x
}

/// Boundary condition for the aperiodic spline.
#[derive(Debug, Clone, Copy)]
pub enum Boundary {
    Natural,
    /// Prescribed end slopes (first derivatives at both ends).
    Clamped(f64, f64),
}

/// C² cubic spline on an increasing knot vector, natural or clamped.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    m: Vec<f64>,
}

impl CubicSpline {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>, boundary: Boundary) -> Self {
        let n = xs.len();
        assert!(n >= 3 && ys.len() == n, "need at least 3 samples");
        let mut lower = vec![0.0; n];
        let mut diag = vec![0.0; n];
        let mut upper = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        for i in 1..n - 1 {
            let h0 = xs[i] - xs[i - 1];
            let h1 = xs[i + 1] - xs[i];
            lower[i] = h0 / 6.0;
            diag[i] = (h0 + h1) / 3.0;
            upper[i] = h1 / 6.0;
            rhs[i] = (ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0;
        }
        match boundary {
            Boundary::Natural => {
                diag[0] = 1.0;
                diag[n - 1] = 1.0;
            }
            Boundary::Clamped(s0, sn) => {
                let h0 = xs[1] - xs[0];
                diag[0] = h0 / 3.0;
                upper[0] = h0 / 6.0;
                rhs[0] = (ys[1] - ys[0]) / h0 - s0;
                let hl = xs[n - 1] - xs[n - 2];
                lower[n - 1] = hl / 6.0;
                diag[n - 1] = hl / 3.0;
                rhs[n - 1] = sn - (ys[n - 1] - ys[n - 2]) / hl;
            }
        }
        let m = solve_tridiag(&lower, &diag, &upper, &rhs);
        CubicSpline { xs, ys, m }
    }

    fn segment(&self, x: f64) -> usize {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return 0;
        }
        if x >= self.xs[n - 1] {
            return n - 2;
        }
        // binary search for the containing interval
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
        let a = self.xs[i + 1] - x;
        let b = x - self.xs[i];
        self.m[i] * a * a * a / (6.0 * h)
            + self.m[i + 1] * b * b * b / (6.0 * h)
            + (self.ys[i] / h - self.m[i] * h / 6.0) * a
            + (self.ys[i + 1] / h - self.m[i + 1] * h / 6.0) * b
    }

    pub fn deriv1(&self, x: f64) -> f64 {
        let i = self.segment(x);
        let h = self.xs[i + 1] - self.xs[i];
        let a = self.xs[i + 1] - x;
        let b = x - self.xs[i];
        -self.m[i] * a * a / (2.0 * h) + self.m[i + 1] * b * b / (2.0 * h)
            - (self.ys[i] / h - self.m[i] * h / 6.0)
            + (self.ys[i + 1] / h - self.m[i + 1] * h / 6.0)
    }

    pub fn deriv2(&self, x: f64) -> f64 {
        let i = self.segment(x);
        let h = self.xs[i + 1] - self.xs[i];
        self.m[i] * (self.xs[i + 1] - x) / h + self.m[i + 1] * (x - self.xs[i]) / h
    }
}

fn solve_tridiag(lower: &[f64], diag: &[f64], upper: &[f64], rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let m = diag[i] - lower[i] * c[i - 1];
        c[i] = if i < n - 1 { upper[i] / m } else { 0.0 };
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / m;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    x
}
