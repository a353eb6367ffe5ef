//! Displacement formulas and the inequalities used by the case analyses.
//!
//! Everything here takes parameter values rather than maps, so the same
//! routines serve concrete pairs and the symbolic case tables.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::halfspace::HPoint;
use crate::mobius::{Complex, GroupParams, IDENTITY_TOL};
use crate::numeric::acosh_clamped;

/// A lower bound for `ρ = max{ρ(f), ρ(g)}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DisplacementBound {
    pub rho_lower: f64,
    pub attained_hint: String,
}

/// Displacement of a point at distance `delta` from the axis of a map with
/// parameter `beta`: `4 cosh ρ = cosh(2δ)|β| + |β + 4|`.
pub fn rho_from_beta_delta(beta: Complex, delta: f64) -> Result<f64> {
    if beta.norm() <= IDENTITY_TOL {
        return Err(Error::Parabolic);
    }
    let c = ((2.0 * delta).cosh() * beta.norm() + (beta + 4.0).norm()) / 4.0;
    Ok(acosh_clamped(c))
}

/// Displacement of `x` under `z ↦ z + u`: `cosh h = 1 + |u|²/(2t²)`.
pub fn parabolic_displacement(u: Complex, x: &HPoint) -> Result<f64> {
    if u.norm() == 0.0 {
        return Err(Error::InvalidArgument("parabolic translation must be nonzero".into()));
    }
    Ok(acosh_clamped(1.0 + u.norm_sqr() / (2.0 * x.height * x.height)))
}

/// Upper bounds on `cosh 2δ(f)` and `sinh² 2δ(f)` for `f` elliptic of order
/// `n` with `ρ(f) ≤ ρ`; both are equalities exactly when `θ(f) = ±2π/n`.
pub fn elliptic_delta_upper(n: u32, rho: f64) -> Result<(f64, f64)> {
    if n < 3 {
        return Err(Error::OrderOutOfRange(n));
    }
    let t = rho.cosh();
    let s2 = (PI / n as f64).sin().powi(2);
    let c2 = 1.0 - s2;
    let cosh2 = (t - c2) / s2;
    let sinh2_sq = (t - 1.0) * (t + 1.0 - 2.0 * c2) / (s2 * s2);
    Ok((cosh2, sinh2_sq))
}

/// Upper bounds `4 cosh ρ/|β|` and `4 sinh ρ/|β|` on `cosh 2δ(g)` and
/// `sinh 2δ(g)`.
pub fn order2_delta_upper(beta: Complex, rho: f64) -> Result<(f64, f64)> {
    if beta.norm() <= IDENTITY_TOL {
        return Err(Error::Parabolic);
    }
    Ok((4.0 * rho.cosh() / beta.norm(), 4.0 * rho.sinh() / beta.norm()))
}

/// Lower bound on `m(f)² m(g)²` in terms of the parameters.
pub fn matrix_norm_product_lower(p: &GroupParams) -> f64 {
    let bb = p.beta_f * p.beta_g;
    let g4 = p.gamma * 4.0;
    2.0 * ((g4 + bb).norm() + g4.norm() + bb.norm())
}

/// `8 cosh ρ ≥ M` with `M = |β_f + 4| + |β_g + 4| + √(m_f² m_g² + (|β_f + 4| − |β_g + 4|)²)`
/// and the product of squared matrix norms bounded below from the parameters.
pub fn joint_rho_lower(p: &GroupParams) -> DisplacementBound {
    let pf = (p.beta_f + 4.0).norm();
    let pg = (p.beta_g + 4.0).norm();
    let mm = matrix_norm_product_lower(p);
    let m = pf + pg + (mm + (pf - pg).powi(2)).sqrt();
    DisplacementBound {
        rho_lower: acosh_clamped((m / 8.0).max(1.0)),
        attained_hint: "equality needs rho(f) = rho(g) and, for nonparabolic f and g, \
                        delta(f) = delta(g) = delta(f,g)/2"
            .into(),
    }
}

/// Upper bound on `|β_g + 4|` given `t = cosh ρ`:
/// `|β_g + 4| ≤ 4t − 4|γ|/(4t − |β_f + 4|)`.
pub fn beta_upper_from_gamma(t: f64, gamma_abs: f64, beta_f_plus4_abs: f64) -> Result<f64> {
    let four_t = 4.0 * t;
    if four_t <= beta_f_plus4_abs {
        return Err(Error::BoundVacuous { four_t, beta_f_plus4: beta_f_plus4_abs });
    }
    Ok(four_t - 4.0 * gamma_abs / (four_t - beta_f_plus4_abs))
}

/// Smallest `t` compatible with a given `|β_g + 4|`: the larger root of
/// `(4t − |β_f + 4|)(4t − |β_g + 4|) = 4|γ|`.
pub fn min_t_from_beta(beta_g_plus4_abs: f64, gamma_abs: f64, beta_f_plus4_abs: f64) -> f64 {
    let (p, q) = (beta_f_plus4_abs, beta_g_plus4_abs);
    ((p + q) + ((p - q).powi(2) + 16.0 * gamma_abs).sqrt()) / 8.0
}
