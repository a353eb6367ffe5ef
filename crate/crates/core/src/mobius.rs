//! Unit-determinant complex 2×2 matrices and the Möbius maps they represent.
//!
//! Everything exported here that describes a map (β, γ, the matrix norm,
//! the classification) is invariant under negating the matrix, so the choice
//! of representative made by [`MoebiusMap::normalize`] never leaks out.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Complex = Complex64;

/// Tolerance used when deciding that a map is the identity or parabolic.
pub const IDENTITY_TOL: f64 = 1e-9;

/// Largest elliptic order searched for by [`classify`].
pub const MAX_ELLIPTIC_ORDER: u32 = 2000;

const ORDER_TOL: f64 = 1e-9;

/// Relative size below which a determinant counts as zero.
const SINGULAR_REL_TOL: f64 = 1e-14;

pub(crate) fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub(crate) fn re(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

/// A 2×2 complex matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Matrix2 {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub d: Complex,
}

impl Matrix2 {
    pub const fn new(a: Complex, b: Complex, c: Complex, d: Complex) -> Self {
        Self { a, b, c, d }
    }

    /// Builds a matrix from eight reals in row-major order
    /// `a.re, a.im, b.re, b.im, c.re, c.im, d.re, d.im`.
    pub fn from_reals(v: [f64; 8]) -> Self {
        Self::new(c(v[0], v[1]), c(v[2], v[3]), c(v[4], v[5]), c(v[6], v[7]))
    }

    pub fn to_reals(&self) -> [f64; 8] {
        [
            self.a.re, self.a.im, self.b.re, self.b.im, self.c.re, self.c.im, self.d.re,
            self.d.im,
        ]
    }

    pub fn identity() -> Self {
        Self::new(re(1.0), re(0.0), re(0.0), re(1.0))
    }

    pub fn det(&self) -> Complex {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex {
        self.a + self.d
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// Adjugate; the inverse when the determinant is 1.
    pub fn adjugate(&self) -> Self {
        Self::new(self.d, -self.b, -self.c, self.a)
    }

    /// Entrywise root-sum-square norm.
    pub fn frobenius(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.a.norm().max(self.b.norm()).max(self.c.norm()).max(self.d.norm())
    }

    pub fn is_finite(&self) -> bool {
        [self.a, self.b, self.c, self.d].iter().all(|z| z.is_finite())
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;

    fn mul(self, o: Matrix2) -> Matrix2 {
        Matrix2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

/// A Möbius transformation `z ↦ (az + b)/(cz + d)` stored as a matrix with
/// determinant 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Matrix2", into = "Matrix2")]
pub struct MoebiusMap {
    mat: Matrix2,
}

impl TryFrom<Matrix2> for MoebiusMap {
    type Error = Error;

    fn try_from(m: Matrix2) -> Result<Self> {
        Self::normalize(m)
    }
}

impl From<MoebiusMap> for Matrix2 {
    fn from(f: MoebiusMap) -> Matrix2 {
        f.mat
    }
}

/// Square root of `w` with nonnegative real part, ties broken towards a
/// nonnegative imaginary part.
fn canonical_sqrt(w: Complex) -> Complex {
    let s = w.sqrt();
    if s.re < 0.0 || (s.re == 0.0 && s.im < 0.0) {
        -s
    } else {
        s
    }
}

impl MoebiusMap {
    /// Rescales `m` to determinant 1, using the square root of `1/det` with
    /// nonnegative real part.
    pub fn normalize(m: Matrix2) -> Result<Self> {
        let det = m.det();
        let scale = m.max_abs();
        if !m.is_finite() || !det.is_finite() || scale == 0.0 {
            return Err(Error::DegenerateMatrix(det.norm()));
        }
        if det.norm() <= SINGULAR_REL_TOL * scale * scale {
            return Err(Error::DegenerateMatrix(det.norm()));
        }
        if (det - 1.0).norm() <= f64::EPSILON {
            return Ok(Self { mat: m });
        }
        let s = canonical_sqrt(det.inv());
        Ok(Self { mat: m.scale(s) })
    }

    /// Wraps a matrix whose determinant is already 1 (within `tol`) without
    /// rescaling it, so its entries are kept bit for bit.
    pub fn from_unit_matrix(m: Matrix2, tol: f64) -> Result<Self> {
        let det = m.det();
        if !m.is_finite() || (det - 1.0).norm() > tol {
            return Err(Error::InvalidArgument(format!("determinant {det} is not 1")));
        }
        Ok(Self { mat: m })
    }

    pub fn from_entries(a: Complex, b: Complex, c: Complex, d: Complex) -> Result<Self> {
        Self::normalize(Matrix2::new(a, b, c, d))
    }

    pub fn identity() -> Self {
        Self { mat: Matrix2::identity() }
    }

    /// `z ↦ k z`.
    pub fn dilation(k: Complex) -> Result<Self> {
        Self::from_entries(k, re(0.0), re(0.0), re(1.0))
    }

    /// `z ↦ z + u`.
    pub fn translation(u: Complex) -> Self {
        Self { mat: Matrix2::new(re(1.0), u, re(0.0), re(1.0)) }
    }

    /// The map sending `x + t·j` to `j`: `z ↦ (z − x)/t`.
    pub(crate) fn to_base_point(horizontal: Complex, height: f64) -> Self {
        let s = height.sqrt();
        Self {
            mat: Matrix2::new(re(1.0 / s), -horizontal / s, re(0.0), re(s)),
        }
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.mat
    }

    pub fn trace(&self) -> Complex {
        self.mat.trace()
    }

    pub fn negated(&self) -> Self {
        Self { mat: self.mat.scale(re(-1.0)) }
    }

    pub fn inverse(&self) -> Self {
        Self { mat: self.mat.adjugate() }
    }

    pub fn compose(&self, other: &MoebiusMap) -> Self {
        Self { mat: self.mat * other.mat }
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &MoebiusMap) -> Self {
        h.compose(self).compose(&h.inverse())
    }

    pub fn powi(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// Distance in matrix norm to the nearer of `±I`.
    pub fn distance_to_identity(&self) -> f64 {
        let m = &self.mat;
        let plus = Matrix2::new(m.a - 1.0, m.b, m.c, m.d - 1.0).frobenius();
        let minus = Matrix2::new(m.a + 1.0, m.b, m.c, m.d + 1.0).frobenius();
        plus.min(minus)
    }

    pub fn is_identity(&self) -> bool {
        self.distance_to_identity() <= IDENTITY_TOL
    }

    /// Image of a finite point, `None` when it is sent to ∞.
    pub fn apply_finite(&self, z: Complex) -> Option<Complex> {
        let den = self.mat.c * z + self.mat.d;
        if den == re(0.0) {
            None
        } else {
            Some((self.mat.a * z + self.mat.b) / den)
        }
    }
}

impl Mul for MoebiusMap {
    type Output = MoebiusMap;

    fn mul(self, o: MoebiusMap) -> MoebiusMap {
        self.compose(&o)
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.mat;
        write!(f, "[[{}, {}], [{}, {}]]", m.a, m.b, m.c, m.d)
    }
}

/// `tr²(f) − 4`.
pub fn beta(f: &MoebiusMap) -> Complex {
    let t = f.trace();
    t * t - 4.0
}

/// `tr([f, g]) − 2` with `[f, g] = f g f⁻¹ g⁻¹`.
pub fn gamma(f: &MoebiusMap, g: &MoebiusMap) -> Complex {
    let comm = f.compose(g).compose(&f.inverse()).compose(&g.inverse());
    comm.trace() - 2.0
}

/// `β(g²) = β(g)(β(g) + 4)`.
pub fn beta_of_square(beta_g: Complex) -> Complex {
    beta_g * (beta_g + 4.0)
}

/// The conjugacy triple `(γ(f,g), β(f), β(g))` of a two-generator group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroupParams {
    pub gamma: Complex,
    pub beta_f: Complex,
    pub beta_g: Complex,
}

impl GroupParams {
    pub const fn new(gamma: Complex, beta_f: Complex, beta_g: Complex) -> Self {
        Self { gamma, beta_f, beta_g }
    }

    pub fn real(gamma: f64, beta_f: f64, beta_g: f64) -> Self {
        Self::new(re(gamma), re(beta_f), re(beta_g))
    }

    pub fn of(f: &MoebiusMap, g: &MoebiusMap) -> Self {
        Self::new(gamma(f, g), beta(f), beta(g))
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.gamma, self.beta_f, self.beta_g)
    }
}

/// Translation length `τ ≥ 0` and rotation angle `θ ∈ (−π, π]`.
///
/// `θ` is the argument of the multiplier `λ²`, where `λ` is the eigenvalue
/// with `|λ| ≥ 1` (for elliptics, `λ = (tr + √β)/2` with the principal root).
pub fn translation_rotation(f: &MoebiusMap) -> Result<(f64, f64)> {
    let b = beta(f);
    if f.is_identity() || b.norm() <= IDENTITY_TOL {
        return Err(Error::NoDecomposition);
    }
    let tr = f.trace();
    let mut lambda = (tr + b.sqrt()) / 2.0;
    if lambda.norm() < 1.0 {
        lambda = lambda.inv();
    }
    let k = lambda * lambda;
    let tau = k.norm().ln().max(0.0);
    let mut theta = k.arg();
    if theta <= -PI {
        theta = PI;
    }
    Ok((tau, theta))
}

/// `m(f) = ‖A − A⁻¹‖`.
pub fn matrix_norm(f: &MoebiusMap) -> f64 {
    let m = f.matrix();
    // A − A⁻¹ = [[a − d, 2b], [2c, d − a]]
    (2.0 * (m.a - m.d).norm_sqr() + 4.0 * m.b.norm_sqr() + 4.0 * m.c.norm_sqr()).sqrt()
}

/// Conjugacy class of a single Möbius map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ElementClass {
    Identity,
    Parabolic,
    Elliptic { theta: f64, order: Option<u32> },
    Loxodromic { tau: f64, theta: f64 },
}

impl ElementClass {
    pub fn name(&self) -> &'static str {
        match self {
            ElementClass::Identity => "identity",
            ElementClass::Parabolic => "parabolic",
            ElementClass::Elliptic { .. } => "elliptic",
            ElementClass::Loxodromic { .. } => "loxodromic",
        }
    }

    pub fn elliptic_order(&self) -> Option<u32> {
        match self {
            ElementClass::Elliptic { order, .. } => *order,
            _ => None,
        }
    }
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementClass::Elliptic { theta, order: Some(n) } => {
                write!(f, "elliptic of order {n} (theta = {theta:.12})")
            }
            ElementClass::Elliptic { theta, order: None } => {
                write!(f, "elliptic of infinite order (theta = {theta:.12})")
            }
            ElementClass::Loxodromic { tau, theta } => {
                write!(f, "loxodromic (tau = {tau:.12}, theta = {theta:.12})")
            }
            other => f.write_str(other.name()),
        }
    }
}

/// Smallest `n ≤ MAX_ELLIPTIC_ORDER` with `n·θ/2π` an integer, if any.
pub fn rotation_order(theta: f64) -> Option<u32> {
    let turns = theta.abs() / (2.0 * PI);
    (1..=MAX_ELLIPTIC_ORDER).find(|&n| {
        let x = turns * n as f64;
        (x - x.round()).abs() <= ORDER_TOL
    })
}

pub fn classify(f: &MoebiusMap) -> ElementClass {
    if f.is_identity() {
        return ElementClass::Identity;
    }
    let b = beta(f);
    if b.norm() <= IDENTITY_TOL {
        return ElementClass::Parabolic;
    }
    let cosh_tau = ((b + 4.0).norm() + b.norm()) / 4.0;
    let (tau, theta) = translation_rotation(f).expect("nonparabolic, nonidentity");
    if cosh_tau - 1.0 <= IDENTITY_TOL && theta != 0.0 {
        ElementClass::Elliptic { theta, order: rotation_order(theta) }
    } else {
        ElementClass::Loxodromic { tau, theta }
    }
}

/// The parameter transforms of a two-generator group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrickeTransform {
    /// `γ(f, g²) = γ(β_g + 4)`.
    PowerG2,
    /// `γ(f, g f g⁻¹) = γ(γ − β_f)`.
    ConjCommutator,
    /// `β(fg) = γ − β_g − 4`, valid when `f` has order 2.
    BetaFgOrder2,
    /// `γ(f̃, g) = β_g − γ` for the order-2 companion `f̃` of `f`.
    TildeF,
}

impl FrickeTransform {
    pub const ALL: [FrickeTransform; 4] = [
        FrickeTransform::PowerG2,
        FrickeTransform::ConjCommutator,
        FrickeTransform::BetaFgOrder2,
        FrickeTransform::TildeF,
    ];
}

pub fn fricke_transform(p: &GroupParams, which: FrickeTransform) -> Result<Complex> {
    let GroupParams { gamma, beta_f, beta_g } = *p;
    match which {
        FrickeTransform::PowerG2 => Ok(gamma * (beta_g + 4.0)),
        FrickeTransform::ConjCommutator => Ok(gamma * (gamma - beta_f)),
        FrickeTransform::BetaFgOrder2 => {
            if (beta_f + 4.0).norm() > IDENTITY_TOL {
                return Err(Error::IdentityNotApplicable("beta(fg) needs f of order 2"));
            }
            Ok(gamma - beta_g - 4.0)
        }
        FrickeTransform::TildeF => {
            if gamma.norm() <= IDENTITY_TOL {
                return Err(Error::IdentityNotApplicable(
                    "f-tilde needs f and g without a common fixed point",
                ));
            }
            Ok(beta_g - gamma)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn m(a: f64, b: f64, cc: f64, d: f64) -> Matrix2 {
        Matrix2::new(re(a), re(b), re(cc), re(d))
    }

    fn elliptic(theta: f64) -> MoebiusMap {
        let h = c(0.0, theta / 2.0).exp();
        MoebiusMap::from_entries(h, re(0.0), re(0.0), h.inv()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let f = MoebiusMap::normalize(m(2.0, 0.0, 0.0, 0.5)).unwrap();
        assert_eq!(*f.matrix(), m(2.0, 0.0, 0.0, 0.5));
        let f = MoebiusMap::normalize(m(2.0, 0.0, 0.0, 2.0)).unwrap();
        assert!(close(f.matrix().a, re(1.0), 1e-15) && close(f.matrix().d, re(1.0), 1e-15));
        let f = MoebiusMap::normalize(m(1.0, 1.0, 1.0, 2.0)).unwrap();
        assert_eq!(*f.matrix(), m(1.0, 1.0, 1.0, 2.0));
    }

    #[test]
    fn normalize_picks_root_with_nonnegative_real_part() {
        // det = −1: 1/det = −1, roots ±i, tie on real part goes to +i.
        let f = MoebiusMap::normalize(m(0.0, 1.0, 1.0, 0.0)).unwrap();
        assert!(close(f.matrix().b, c(0.0, 1.0), 1e-15));
        assert!(close(f.matrix().det(), re(1.0), 1e-12));
    }

    #[test]
    fn singular_matrix_rejected() {
        let err = MoebiusMap::normalize(m(1.0, 2.0, 2.0, 4.0)).unwrap_err();
        assert!(err.to_string().contains("degenerate matrix"));
        assert!(MoebiusMap::normalize(m(0.0, 0.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn beta_examples() {
        let s = 2f64.sqrt();
        let f = MoebiusMap::from_entries(re(s), re(0.0), re(0.0), re(1.0 / s)).unwrap();
        assert!(close(beta(&f), re(0.5), 1e-12));
        assert!(close(beta(&elliptic(2.0 * PI / 3.0)), re(-3.0), 1e-12));
        assert!(close(beta(&MoebiusMap::translation(re(1.0))), re(0.0), 0.0));
    }

    #[test]
    fn gamma_of_map_with_itself_is_zero() {
        let f = MoebiusMap::normalize(m(1.0, 1.0, 1.0, 2.0)).unwrap();
        assert!(close(gamma(&f, &f), re(0.0), 1e-12));
    }

    #[test]
    fn modular_pair_gamma() {
        let s = 2f64.sqrt();
        let f = MoebiusMap::translation(re(1.0 / s));
        let g = MoebiusMap::from_entries(re(0.0), re(1.0 / s), re(-s), re(0.0)).unwrap();
        assert!((gamma(&f, &g).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn translation_rotation_examples() {
        let f = MoebiusMap::dilation(re(2.0)).unwrap();
        let (tau, theta) = translation_rotation(&f).unwrap();
        assert!((tau - 2f64.ln()).abs() < 1e-12 && theta.abs() < 1e-12);

        let (tau, theta) = translation_rotation(&elliptic(2.0 * PI / 3.0)).unwrap();
        assert!(tau < 1e-12 && (theta.abs() - 2.0 * PI / 3.0).abs() < 1e-12);

        let (tau, theta) = translation_rotation(&elliptic(PI)).unwrap();
        assert!(tau < 1e-12 && (theta - PI).abs() < 1e-12);
    }

    #[test]
    fn translation_rotation_rejects_parabolic_and_identity() {
        let e = translation_rotation(&MoebiusMap::translation(re(1.0))).unwrap_err();
        assert!(e.to_string().contains("no translation/rotation decomposition"));
        assert!(translation_rotation(&MoebiusMap::identity()).is_err());
    }

    #[test]
    fn matrix_norm_examples() {
        let f = MoebiusMap::dilation(re(2.0)).unwrap();
        assert!((matrix_norm(&f) - 1.0).abs() < 1e-12);
        let f = MoebiusMap::dilation(re(-1.0)).unwrap();
        assert!((matrix_norm(&f).powi(2) - 8.0).abs() < 1e-12);
        assert!((matrix_norm(&MoebiusMap::translation(re(1.0))) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&MoebiusMap::translation(re(1.0))), ElementClass::Parabolic);
        assert_eq!(classify(&MoebiusMap::identity()), ElementClass::Identity);
        assert_eq!(classify(&MoebiusMap::identity().negated()), ElementClass::Identity);
        assert_eq!(classify(&elliptic(2.0 * PI / 3.0)).elliptic_order(), Some(3));
        assert_eq!(classify(&elliptic(4.0 * PI / 5.0)).elliptic_order(), Some(5));
        assert_eq!(classify(&elliptic(PI)).elliptic_order(), Some(2));
        assert_eq!(classify(&elliptic(1.0)).elliptic_order(), None);
        match classify(&MoebiusMap::dilation(re(2.0)).unwrap()) {
            ElementClass::Loxodromic { tau, .. } => assert!((tau - 2f64.ln()).abs() < 1e-12),
            other => panic!("expected loxodromic, got {other}"),
        }
    }

    #[test]
    fn fricke_examples() {
        let p = GroupParams::real(-1.0, -3.0, -3.0);
        assert!(close(fricke_transform(&p, FrickeTransform::PowerG2).unwrap(), re(-1.0), 0.0));
        assert!(close(beta_of_square(re(-3.0)), re(-3.0), 0.0));

        let beta_g = re(-1.7);
        let p = GroupParams::new(beta_g + 2.0, re(-4.0), beta_g);
        let b = fricke_transform(&p, FrickeTransform::BetaFgOrder2).unwrap();
        assert!(close(b, re(-2.0), 1e-15));

        let p = GroupParams::real(-3.0, -3.0, -1.0);
        let v = fricke_transform(&p, FrickeTransform::ConjCommutator).unwrap();
        assert!(close(v, re(0.0), 0.0));
    }

    #[test]
    fn fricke_preconditions() {
        let p = GroupParams::real(-1.0, -3.0, -2.0);
        let e = fricke_transform(&p, FrickeTransform::BetaFgOrder2).unwrap_err();
        assert!(e.to_string().contains("identity not applicable"));
        let p = GroupParams::real(0.0, -3.0, -2.0);
        assert!(fricke_transform(&p, FrickeTransform::TildeF).is_err());
        let p = GroupParams::real(-2.0, -3.0, -2.0);
        assert!(close(fricke_transform(&p, FrickeTransform::TildeF).unwrap(), re(0.0), 0.0));
    }
}
