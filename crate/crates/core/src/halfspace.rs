//! The upper half-space model of hyperbolic 3-space.
//!
//! A point is `x = z + t·j` with `z` complex and height `t > 0`; the boundary
//! is the extended complex plane. Möbius maps act on both through the
//! Poincaré extension.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mobius::{beta, Complex, GroupParams, MoebiusMap, IDENTITY_TOL};
use crate::numeric::acosh_clamped;

/// A point of the upper half-space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HPoint {
    pub horizontal: Complex,
    pub height: f64,
}

impl HPoint {
    pub fn new(horizontal: Complex, height: f64) -> Result<Self> {
        if height.is_nan() || height <= 0.0 || !height.is_finite() || !horizontal.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "half-space point needs finite coordinates and positive height, got height {height}"
            )));
        }
        Ok(Self { horizontal, height })
    }

    /// The base point `j = (0, 0, 1)`.
    pub fn j() -> Self {
        Self { horizontal: Complex::new(0.0, 0.0), height: 1.0 }
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}j)", self.horizontal, self.height)
    }
}

/// A point of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum BoundaryPoint {
    Finite(Complex),
    Infinity,
}

impl BoundaryPoint {
    pub fn finite(&self) -> Option<Complex> {
        match self {
            BoundaryPoint::Finite(z) => Some(*z),
            BoundaryPoint::Infinity => None,
        }
    }
}

impl From<Complex> for BoundaryPoint {
    fn from(z: Complex) -> Self {
        BoundaryPoint::Finite(z)
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(z) => write!(f, "{z}"),
            BoundaryPoint::Infinity => f.write_str("inf"),
        }
    }
}

impl MoebiusMap {
    /// Boundary action, with the limits `f(∞) = a/c` and `f(−d/c) = ∞`.
    pub fn apply_boundary(&self, z: BoundaryPoint) -> BoundaryPoint {
        let m = self.matrix();
        match z {
            BoundaryPoint::Infinity => {
                if m.c.norm() == 0.0 {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite(m.a / m.c)
                }
            }
            BoundaryPoint::Finite(z) => match self.apply_finite(z) {
                Some(w) if w.is_finite() => BoundaryPoint::Finite(w),
                _ => BoundaryPoint::Infinity,
            },
        }
    }
}

/// The hyperbolic line with the given boundary endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geodesic {
    pub p: BoundaryPoint,
    pub q: BoundaryPoint,
}

impl Geodesic {
    pub fn new(p: BoundaryPoint, q: BoundaryPoint) -> Result<Self> {
        if p == q {
            return Err(Error::InvalidArgument("geodesic endpoints coincide".into()));
        }
        Ok(Self { p, q })
    }

    /// A map sending `0 ↦ p` and `∞ ↦ q`.
    pub fn standard_frame(&self) -> MoebiusMap {
        let one = Complex::new(1.0, 0.0);
        let zero = Complex::new(0.0, 0.0);
        let m = match (self.p, self.q) {
            (BoundaryPoint::Finite(p), BoundaryPoint::Finite(q)) => {
                MoebiusMap::from_entries(q, p, one, one)
            }
            (BoundaryPoint::Finite(p), BoundaryPoint::Infinity) => {
                MoebiusMap::from_entries(one, p, zero, one)
            }
            (BoundaryPoint::Infinity, BoundaryPoint::Finite(q)) => {
                MoebiusMap::from_entries(q, one, one, zero)
            }
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => unreachable!("p != q"),
        };
        m.expect("distinct endpoints give a nonsingular frame")
    }

    /// The point at signed arc length `s` from a reference point: the top of
    /// the semicircle, or height 1 on a vertical line. The parameter runs
    /// towards `q`.
    pub fn point_at(&self, s: f64) -> HPoint {
        match (self.p, self.q) {
            (BoundaryPoint::Finite(p), BoundaryPoint::Infinity) => {
                HPoint { horizontal: p, height: s.exp() }
            }
            (BoundaryPoint::Infinity, BoundaryPoint::Finite(q)) => {
                HPoint { horizontal: q, height: (-s).exp() }
            }
            (BoundaryPoint::Finite(p), BoundaryPoint::Finite(q)) => {
                let centre = (p + q) / 2.0;
                let r = (q - p).norm() / 2.0;
                let dir = (q - p) / (2.0 * r);
                HPoint { horizontal: centre + dir * (r * s.tanh()), height: r / s.cosh() }
            }
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => unreachable!("p != q"),
        }
    }

    pub fn image(&self, f: &MoebiusMap) -> Geodesic {
        Geodesic { p: f.apply_boundary(self.p), q: f.apply_boundary(self.q) }
    }
}

impl fmt::Display for Geodesic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.p, self.q)
    }
}

/// Hyperbolic distance, `cosh h = 1 + |x − y|²/(2 t_x t_y)`, evaluated in the
/// `arcsinh` form that stays accurate for nearby points.
pub fn hyp_distance(x: &HPoint, y: &HPoint) -> f64 {
    let dz = (x.horizontal - y.horizontal).norm_sqr();
    let dt = (x.height - y.height).powi(2);
    2.0 * ((dz + dt).sqrt() / (2.0 * (x.height * y.height).sqrt())).asinh()
}

/// Chordal distance on the Riemann sphere of diameter 2.
pub fn chordal(z: BoundaryPoint, w: BoundaryPoint) -> f64 {
    match (z, w) {
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => 0.0,
        (BoundaryPoint::Finite(z), BoundaryPoint::Infinity)
        | (BoundaryPoint::Infinity, BoundaryPoint::Finite(z)) => 2.0 / (1.0 + z.norm_sqr()).sqrt(),
        (BoundaryPoint::Finite(z), BoundaryPoint::Finite(w)) => {
            2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()) * (1.0 + w.norm_sqr())).sqrt()
        }
    }
}

const SPHERE_LON: usize = 128;
const SPHERE_LAT: usize = 64;
const REFINE_STEPS: usize = 20;

/// Inverse stereographic chart: latitude `φ ∈ [−π/2, π/2]`, longitude `λ`.
fn sphere_point(lat: f64, lon: f64) -> BoundaryPoint {
    if lat >= FRAC_PI_2 {
        return BoundaryPoint::Infinity;
    }
    let r = (FRAC_PI_4 + lat / 2.0).tan();
    BoundaryPoint::Finite(Complex::from_polar(r.max(0.0), lon))
}

fn chordal_displacement(f: &MoebiusMap, z: BoundaryPoint) -> f64 {
    chordal(f.apply_boundary(z), z)
}

/// `d(f) = sup q(f(z), z)`, estimated on a longitude/latitude grid followed by
/// a pattern search around the best grid cells.
pub fn chordal_norm(f: &MoebiusMap) -> f64 {
    let dlon = 2.0 * PI / SPHERE_LON as f64;
    let dlat = PI / SPHERE_LAT as f64;
    let eval = |lat: f64, lon: f64| chordal_displacement(f, sphere_point(lat.clamp(-FRAC_PI_2, FRAC_PI_2), lon));

    let mut samples: Vec<(f64, f64, f64)> = Vec::with_capacity(SPHERE_LON * (SPHERE_LAT + 1));
    for i in 0..=SPHERE_LAT {
        let lat = -FRAC_PI_2 + dlat * i as f64;
        for k in 0..SPHERE_LON {
            let lon = dlon * k as f64;
            samples.push((eval(lat, lon), lat, lon));
        }
    }
    samples.sort_by(|a, b| b.0.total_cmp(&a.0));

    let mut best = samples[0].0;
    for &(v0, lat0, lon0) in samples.iter().take(8) {
        let (mut v, mut lat, mut lon) = (v0, lat0, lon0);
        let (mut sl, mut sn) = (dlat, dlon);
        for _ in 0..REFINE_STEPS {
            let mut moved = false;
            for (a, b) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0)] {
                let (la, lo) = ((lat + a * sl).clamp(-FRAC_PI_2, FRAC_PI_2), lon + b * sn);
                let w = eval(la, lo);
                if w > v {
                    v = w;
                    lat = la;
                    lon = lo;
                    moved = true;
                }
            }
            if !moved {
                sl /= 2.0;
                sn /= 2.0;
            }
        }
        best = best.max(v);
    }
    best.min(2.0)
}

/// Poincaré extension of `f` to the half-space:
/// `f(z + tj) = [(az + b)·conj(cz + d) + a·conj(c)·t² + t·j] / (|cz + d|² + |c|²t²)`.
pub fn apply(f: &MoebiusMap, x: &HPoint) -> HPoint {
    let m = f.matrix();
    let (z, t) = (x.horizontal, x.height);
    let czd = m.c * z + m.d;
    let den = czd.norm_sqr() + m.c.norm_sqr() * t * t;
    let horizontal = ((m.a * z + m.b) * czd.conj() + m.a * m.c.conj() * (t * t)) / den;
    HPoint { horizontal, height: t / den }
}

/// `ρ(f) = h(f(j), j)`.
pub fn hyperbolic_norm(f: &MoebiusMap) -> f64 {
    let j = HPoint::j();
    hyp_distance(&apply(f, &j), &j)
}

/// Displacement `h(x, f(x))`.
pub fn displacement(f: &MoebiusMap, x: &HPoint) -> f64 {
    hyp_distance(x, &apply(f, x))
}

/// The geodesic joining the two fixed points of `f`.
pub fn axis(f: &MoebiusMap) -> Result<Geodesic> {
    if f.is_identity() || beta(f).norm() <= IDENTITY_TOL {
        return Err(Error::NoAxis);
    }
    let m = f.matrix();
    // Fixed points solve c z² + (d − a) z − b = 0, with discriminant β.
    let amd = m.a - m.d;
    let s = beta(f).sqrt();
    let w = if (amd + s).norm() >= (amd - s).norm() { amd + s } else { amd - s };
    let z1 = if m.c.norm() <= f64::EPSILON * w.norm() {
        BoundaryPoint::Infinity
    } else {
        BoundaryPoint::Finite(w / (m.c * 2.0))
    };
    let z2 = BoundaryPoint::Finite(-(m.b * 2.0) / w);
    Geodesic::new(z1, z2)
}

/// `δ = h(j, L)` from `cosh 2δ = (8 − q²)/q²` with `q` the chordal distance
/// between the endpoints.
pub fn delta_from_j(l: &Geodesic) -> f64 {
    let q2 = chordal(l.p, l.q).powi(2);
    0.5 * acosh_clamped(((8.0 - q2) / q2).max(1.0))
}

/// `h(x, ax(f))`, computed by moving `x` to `j`.
pub fn delta_point_axis(x: &HPoint, f: &MoebiusMap) -> Result<f64> {
    let l = axis(f)?;
    let phi = MoebiusMap::to_base_point(x.horizontal, x.height);
    Ok(delta_from_j(&l.image(&phi)))
}

/// Distance between the axes of `f` and `g` from their parameters:
/// `cosh 2δ = (|4γ + β_fβ_g| + |4γ| + |β_fβ_g|)/|β_fβ_g| − 1`.
pub fn axes_distance_params(p: &GroupParams) -> Result<f64> {
    if p.beta_f.norm() <= IDENTITY_TOL || p.beta_g.norm() <= IDENTITY_TOL {
        return Err(Error::NoAxis);
    }
    let bb = p.beta_f * p.beta_g;
    let num = (p.gamma * 4.0 + bb).norm() + (p.gamma * 4.0).norm() + bb.norm();
    let arg = num / bb.norm() - 1.0;
    Ok(0.5 * acosh_clamped(arg.max(1.0)))
}
