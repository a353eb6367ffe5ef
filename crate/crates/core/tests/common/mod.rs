//! Oracles shared by the integration tests. Each recomputes a quantity from
//! first principles, without the library routine it is compared against.

#![allow(dead_code)]

use margulis::cases::CaseSpec;
use margulis::Complex;
use rand::Rng;

/// `cosh h = 1 + (|z − w|² + (t − s)²)/(2ts)`.
pub fn distance(z: Complex, t: f64, w: Complex, s: f64) -> f64 {
    let q = ((z - w).norm_sqr() + (t - s).powi(2)) / (2.0 * t * s);
    // acosh(1 + q) = 2 asinh(√(q/2)) keeps small distances accurate
    2.0 * (q / 2.0).sqrt().asinh()
}

/// A geodesic by its endpoints; `None` is `∞`.
#[derive(Clone, Copy, Debug)]
pub struct Line(pub Option<Complex>, pub Option<Complex>);

impl Line {
    /// Point at parameter `u ∈ ℝ`, moving from the first endpoint to the second.
    pub fn at(&self, u: f64) -> (Complex, f64) {
        match (self.0, self.1) {
            (Some(p), None) => (p, u.exp()),
            (None, Some(q)) => (q, (-u).exp()),
            (Some(p), Some(q)) => {
                let mid = (p + q) * 0.5;
                let r = (q - p).norm() * 0.5;
                let dir = (q - p) / (q - p).norm();
                (mid + dir * (r * u.tanh()), r / u.cosh())
            }
            (None, None) => panic!("degenerate line"),
        }
    }
}

/// Golden-section minimum of `f` on `[a, b]`.
pub fn golden(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let (mut x1, mut x2) = (b - r * (b - a), a + r * (b - a));
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..iters {
        if f1 <= f2 {
            b = x2;
            (x2, f2) = (x1, f1);
            x1 = b - r * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            (x1, f1) = (x2, f2);
            x2 = a + r * (b - a);
            f2 = f(x2);
        }
    }
    f1.min(f2)
}

/// Distance between two geodesics by nested golden search over both
/// parameters. The distance is jointly convex, so the nesting is exact up to
/// the search tolerance. The window is `±40`.
pub fn line_distance(l1: Line, l2: Line) -> f64 {
    golden(
        |u| {
            let (z, t) = l1.at(u);
            golden(
                |v| {
                    let (w, s) = l2.at(v);
                    distance(z, t, w, s)
                },
                -40.0,
                40.0,
                120,
            )
        },
        -40.0,
        40.0,
        120,
    )
}

/// Fixed points of `z ↦ (az + b)/(cz + d)` by the quadratic formula.
pub fn fixed_points(m: &margulis::Matrix2) -> Line {
    let (a, b, c, d) = (m.a, m.b, m.c, m.d);
    if c.norm() < 1e-14 {
        // z ↦ (a z + b)/d fixes ∞ and b/(d − a)
        return Line(Some(b / (d - a)), None);
    }
    let disc = ((a - d) * (a - d) + b * c * 4.0).sqrt();
    Line(Some((a - d + disc) / (c * 2.0)), Some((a - d - disc) / (c * 2.0)))
}

/// Smallest `t ≥ (|β + 4| + |β|)/4` with `(4t − p)(4t − q) ≥ 4|γ|`, found
/// by bisection rather than the quadratic formula.
pub fn t_of_oracle(spec: &CaseSpec, beta: Complex) -> f64 {
    let p = (spec.beta_f + 4.0).norm();
    let q = (beta + 4.0).norm();
    let g4 = 4.0 * spec.gamma.norm();
    let own = (q + beta.norm()) / 4.0;
    let ok = |t: f64| 4.0 * t >= p.max(q) && (4.0 * t - p) * (4.0 * t - q) >= g4;
    let (mut lo, mut hi) = (p.max(q) / 4.0, p.max(q) / 4.0 + g4.sqrt() + 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    own.max(hi)
}

/// Minimum of `t` over the parabolic constraints in the variables
/// `(|u|, |b|, |c|)`: a 2-D grid on `(|u|, |b|)` with golden search in `|c|`
/// above `1/|u|`, then local zooming.
pub fn parabolic_oracle() -> f64 {
    let t = |u: f64, b: f64, c: f64| {
        ((u * u + 2.0) / 2.0).max((b * b + c * c) / 2.0).max((2.0 + (c - b).powi(2)) / 2.0)
    };
    let best_c = |u: f64, b: f64| golden(|c| t(u, b, c), 1.0 / u, 1.0 / u + 4.0, 100);
    let (mut cu, mut cb, mut half) = (1.5f64, 1.5f64, 1.45f64);
    let mut best = f64::INFINITY;
    for _ in 0..50 {
        let mut step = (f64::INFINITY, cu, cb);
        for i in 0..=40 {
            for j in 0..=40 {
                let u = (cu - half + 2.0 * half * i as f64 / 40.0).max(1e-3);
                let b = (cb - half + 2.0 * half * j as f64 / 40.0).max(0.0);
                let v = best_c(u, b);
                if v < step.0 {
                    step = (v, u, b);
                }
            }
        }
        best = best.min(step.0);
        (cu, cb) = (step.1, step.2);
        half *= 0.7;
    }
    best
}

/// A point of the region of `spec` within `radius` of `−2`, by rejection.
pub fn sample_region(spec: &CaseSpec, rng: &mut impl Rng, radius: f64) -> Complex {
    loop {
        let z = Complex::new(rng.gen_range(-radius..radius) - 2.0, rng.gen_range(-radius..radius));
        if spec.region.contains(z) {
            return z;
        }
    }
}

/// Approximate equality with a message.
#[track_caller]
pub fn close(a: f64, b: f64, tol: f64) {
    assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
}
