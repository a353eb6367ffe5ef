//! Small scalar routines shared by the solvers.

/// Width of the band below 1 that `arccosh` arguments are clamped from.
pub const ACOSH_CLAMP: f64 = 1e-12;

/// `arccosh(x)`, treating `x ∈ [1 − 1e-12, 1]` as exactly 1.
///
/// Arguments further below 1 still produce NaN so that genuine domain errors
/// stay visible.
pub fn acosh_clamped(x: f64) -> f64 {
    if (1.0 - ACOSH_CLAMP..=1.0).contains(&x) {
        0.0
    } else {
        x.acosh()
    }
}

/// Bisection for an increasing function: returns `x` in `[lo, hi]` with
/// `f(x) ≈ target`, running a fixed number of halvings.
pub fn bisect_increasing<F: Fn(f64) -> f64>(
    f: F,
    target: f64,
    mut lo: f64,
    mut hi: f64,
    iterations: usize,
) -> f64 {
    for _ in 0..iterations {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section search for a minimum of a unimodal function on `[a, b]`.
/// Returns `(argmin, min)`.
pub fn golden_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Dense sampling followed by golden-section refinement around the best
/// sample; for functions that are only piecewise unimodal.
pub fn sampled_min<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, samples: usize, tol: f64) -> (f64, f64) {
    let step = (b - a) / samples as f64;
    let (best_i, _) = (0..=samples)
        .map(|i| (i, f(a + step * i as f64)))
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    let lo = (a + step * (best_i as f64 - 1.0)).max(a);
    let hi = (a + step * (best_i as f64 + 1.0)).min(b);
    golden_min(f, lo, hi, tol)
}
