//! Scalar numerics: quadrature, root bracketing, 1-D minimization,
//! finite differences, angle unwrapping, a tiny deterministic RNG.

/// Composite trapezoid rule over one full period of a periodic integrand,
/// sampled at `n` uniform points on `[0, period)`. Spectrally accurate for
/// smooth periodic functions.
pub fn trapezoid_periodic(f: impl Fn(f64) -> f64, period: f64, n: usize) -> f64 {
    let h = period / n as f64;
    let mut acc = 0.0;
    for i in 0..n {
        acc += f(i as f64 * h);
    }
    acc * h
}

/// Composite Simpson rule on `[a, b]` with `n` subintervals (`n` rounded up
/// to even).
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = if n % 2 == 0 { n.max(2) } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

/// Cumulative integral of `f` at the `n+1` uniform nodes of `[a, b]`,
/// one Simpson panel (with midpoint) per step. Returns `n+1` values
/// starting at 0.
pub fn cumulative_integral(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> Vec<f64> {
    let h = (b - a) / n as f64;
    let mut out = Vec::with_capacity(n + 1);
    out.push(0.0);
    let mut acc = 0.0;
    let mut f_left = f(a);
    for i in 0..n {
        let t0 = a + i as f64 * h;
        let fm = f(t0 + 0.5 * h);
        let f_right = f(t0 + h);
        acc += h / 6.0 * (f_left + 4.0 * fm + f_right);
        out.push(acc);
        f_left = f_right;
    }
    out
}

/// Bisection for a root of `f` on `[lo, hi]`; requires a sign change.
/// Runs until the bracket is below `xtol` (at most 200 iterations).
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, xtol: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    if flo > 0.0 {
        std::mem::swap(&mut lo, &mut hi);
        flo = f(lo);
        if flo == 0.0 {
            return lo;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() < xtol {
            return mid;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section minimization of a unimodal function on `[a, b]`.
pub fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..300 {
        if (b - a).abs() < xtol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Maximize a smooth function on a circle: coarse scan over `n` samples of
/// `[0, period)` followed by golden-section refinement around the best cell.
pub fn periodic_max(f: impl Fn(f64) -> f64, period: f64, n: usize) -> (f64, f64) {
    let h = period / n as f64;
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for i in 0..n {
        let v = f(i as f64 * h);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let center = best_i as f64 * h;
    let (x, neg) = golden_min(|t| -f(t), center - h, center + h, 1e-13 * period.max(1.0));
    (x, -neg)
}

/// Centered finite-difference derivative of order `order` (1..=4) with one
/// Richardson step (h and h/2 stencils combined to cancel the leading error
/// term).
pub fn fd_derivative(f: impl Fn(f64) -> f64, x: f64, h: f64, order: usize) -> f64 {
    let d = |h: f64| -> f64 {
        match order {
            1 => (f(x + h) - f(x - h)) / (2.0 * h),
            2 => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
            3 => (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h))
                / (2.0 * h * h * h),
            4 => {
                (f(x + 2.0 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h))
                    / (h * h * h * h)
            }
            _ => panic!("fd_derivative supports orders 1..=4"),
        }
    };
    // All stencils above have O(h^2) truncation error.
    let coarse = d(h);
    let fine = d(0.5 * h);
    (4.0 * fine - coarse) / 3.0
}

/// Unwraps a sequence of angles in place so consecutive samples differ by
/// less than pi.
pub fn unwrap_angles(angles: &mut [f64]) {
    for i in 1..angles.len() {
        let mut d = angles[i] - angles[i - 1];
        while d > std::f64::consts::PI {
            d -= 2.0 * std::f64::consts::PI;
        }
        while d < -std::f64::consts::PI {
            d += 2.0 * std::f64::consts::PI;
        }
        angles[i] = angles[i - 1] + d;
    }
}

/// splitmix64: tiny deterministic generator for the seeded test corpus.
/// Not a statistical-quality RNG; reproducibility across platforms is the
/// only requirement here.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}
