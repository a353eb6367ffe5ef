//! Pairs for which the displacement bounds are attained.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constants::{self, Order};
use crate::error::{Error, Result};
use crate::halfspace::{displacement, BoundaryPoint, Geodesic, HPoint};
use crate::mobius::{re, Complex, MoebiusMap};
use crate::numeric::bisect_increasing;

/// Tolerance for the equalities checked by [`verify_equality`].
pub const EQUALITY_TOL: f64 = 1e-6;

/// Number of probe points used by [`verify_equality`].
pub const PROBE_POINTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtremalKind {
    /// Orders `n` and 2, axes at distance `b(n)/2`.
    EllipticSharp(u32),
    /// Orders 6 and 3 with a parabolic commutator.
    Orders6And3,
    /// A parabolic and an order-2 elliptic generating the modular group.
    ParabolicModular,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalConfig {
    pub f: MoebiusMap,
    pub g: MoebiusMap,
    pub witness: HPoint,
    pub claimed: f64,
    pub kind: ExtremalKind,
}

impl ExtremalConfig {
    /// `(h(x, f x), h(x, g x))` at the witness.
    pub fn displacements(&self) -> (f64, f64) {
        (displacement(&self.f, &self.witness), displacement(&self.g, &self.witness))
    }
}

/// Rotation by `theta` about the geodesic with endpoints `±radius·dir`; the
/// geodesic crosses the `j`-axis at height `radius`.
fn rotation_about(radius: f64, dir: Complex, theta: f64) -> MoebiusMap {
    let l = Geodesic::new(
        BoundaryPoint::Finite(-dir * radius),
        BoundaryPoint::Finite(dir * radius),
    )
    .expect("distinct endpoints");
    let half = Complex::from_polar(1.0, theta / 2.0);
    let r = MoebiusMap::from_entries(half, re(0.0), re(0.0), half.inv()).expect("unit determinant");
    r.conjugate_by(&l.standard_frame())
}

/// Two rotations about axes orthogonal to the `j`-axis with `2δ(f) = x`,
/// `2δ(g) = budget − x`, where `x` solves the balance equation
/// `kf·cosh x + lf = kg·cosh(budget − x) + lg`. The axes are twisted by
/// `twist` relative to each other.
fn balanced_pair(
    theta_f: f64,
    theta_g: f64,
    budget: f64,
    twist: f64,
    (kf, lf): (f64, f64),
    (kg, lg): (f64, f64),
) -> (MoebiusMap, MoebiusMap) {
    let gap = |x: f64| (kf * x.cosh() + lf) - (kg * (budget - x).cosh() + lg);
    let x = bisect_increasing(gap, 0.0, 0.0, budget, 200);
    let f = rotation_about((x / 2.0).exp(), re(1.0), theta_f);
    let g = rotation_about((-(budget - x) / 2.0).exp(), Complex::from_polar(1.0, twist), theta_g);
    (f, g)
}

/// The sharp pair for order `n ≥ 3`: `f` rotates by `2π/n`, `g` is a
/// half-turn, the axes are `b(n)/2` apart with the witness `j` on their
/// common perpendicular, placed so that `ρ(f) = ρ(g)`. The common value is
/// `d(n)`.
pub fn extremal_elliptic_config(n: u32) -> Result<ExtremalConfig> {
    if n < 3 {
        return Err(Error::OrderOutOfRange(n));
    }
    let s2 = (PI / n as f64).sin().powi(2);
    // 4cosh ρ(f) = 4(s² cosh 2δ_f + c²), 4cosh ρ(g) = 4cosh 2δ_g
    let (f, g) = balanced_pair(
        2.0 * PI / n as f64,
        PI,
        constants::b(n)?,
        PI / 2.0,
        (s2, 1.0 - s2),
        (1.0, 0.0),
    );
    Ok(ExtremalConfig {
        f,
        g,
        witness: HPoint::j(),
        claimed: constants::d(n)?,
        kind: ExtremalKind::EllipticSharp(n),
    })
}

/// `f` of order 6 and `g` of order 3 with `cosh 2δ(f, g) = 5/3` and
/// `γ(f, g) = β(f)` (the axes are a quarter turn apart); both move `j` by
/// `arccosh(17/16) = c(6)`.
pub fn orders_6_3_config() -> ExtremalConfig {
    let (f, g) = balanced_pair(
        PI / 3.0,
        2.0 * PI / 3.0,
        (5.0f64 / 3.0).acosh(),
        PI / 2.0,
        (1.0, 3.0),
        (3.0, 1.0),
    );
    ExtremalConfig {
        f,
        g,
        witness: HPoint::j(),
        claimed: constants::c(6).expect("valid order"),
        kind: ExtremalKind::Orders6And3,
    }
}

/// `f(z) = z + 1/√2` and `g(z) = −1/(2z)`: both move `j` by `arccosh(5/4)`.
pub fn modular_pair() -> ExtremalConfig {
    let f = MoebiusMap::translation(re(FRAC_1_SQRT_2));
    let g = MoebiusMap::from_entries(re(0.0), re(FRAC_1_SQRT_2), re(-SQRT_2), re(0.0))
        .expect("determinant 1");
    ExtremalConfig {
        f,
        g,
        witness: HPoint::j(),
        claimed: constants::c(Order::Infinite).expect("valid order"),
        kind: ExtremalKind::ParabolicModular,
    }
}

/// Outcome of [`equality_check`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EqualityCheck {
    pub rho_f: f64,
    pub rho_g: f64,
    /// Smallest `max{h(x, f x), h(x, g x)}` over the probe points.
    pub probe_min: f64,
    pub passes: bool,
}

/// Checks that the witness is moved exactly `claimed` by both maps and that
/// no point in a hyperbolic ball of radius 1/2 about it does better.
pub fn equality_check(cfg: &ExtremalConfig, seed: u64) -> EqualityCheck {
    let (rho_f, rho_g) = cfg.displacements();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = cfg.witness;
    let mut probe_min = f64::INFINITY;
    for _ in 0..PROBE_POINTS {
        let r = 0.5 * rng.gen::<f64>();
        let phi = 2.0 * PI * rng.gen::<f64>();
        let v: f64 = rng.gen_range(-0.5..0.5);
        let x = HPoint {
            horizontal: w.horizontal + Complex::from_polar(r * w.height, phi),
            height: w.height * v.exp(),
        };
        let m = displacement(&cfg.f, &x).max(displacement(&cfg.g, &x));
        probe_min = probe_min.min(m);
    }
    let passes = (rho_f.max(rho_g) - cfg.claimed).abs() <= EQUALITY_TOL
        && (rho_f - rho_g).abs() <= EQUALITY_TOL
        && probe_min >= cfg.claimed - EQUALITY_TOL;
    EqualityCheck { rho_f, rho_g, probe_min, passes }
}

/// [`equality_check`] with seed 0.
pub fn verify_equality(cfg: &ExtremalConfig) -> bool {
    equality_check(cfg, 0).passes
}
