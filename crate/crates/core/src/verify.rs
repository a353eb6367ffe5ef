//! Check suites behind the `verify` command.
//!
//! Each suite returns a [`Report`] whose checks mirror one group of numeric
//! claims: the parameter identities, the constants table, the case bounds
//! and the extremal configurations. Randomised suites take an explicit seed;
//! [`seed_from_env`] reads it from `MARGULIS_SEED`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::bounds::joint_rho_lower;
use crate::cases::{self, CaseSpec, Disposition, CASE_TOLERANCE};
use crate::constants::{self, Order};
use crate::error::{Error, Result};
use crate::extremal::{self, EQUALITY_TOL};
use crate::halfspace::{
    axes_distance_params, axis, delta_from_j, delta_point_axis, displacement, hyperbolic_norm,
    Geodesic, HPoint,
};
use crate::mobius::{
    beta, beta_of_square, c, gamma, matrix_norm, re, translation_rotation, Complex, GroupParams,
    Matrix2, MoebiusMap,
};
use crate::numeric::golden_min;
use crate::report::{num, num_c, Report};

/// Environment variable holding the seed of the randomised suites.
pub const SEED_VAR: &str = "MARGULIS_SEED";

/// Random pairs drawn by the identity suite.
pub const IDENTITY_PAIRS: usize = 10_000;
/// Relative tolerance of the identity suite.
pub const IDENTITY_TOL: f64 = 1e-9;
/// Tolerance between the closed-form and the minimised axis distance.
pub const AXIS_DISTANCE_TOL: f64 = 1e-6;
/// Pairs and witness points per pair drawn by [`soundness`].
pub const SOUNDNESS_PAIRS: usize = 1_000;
pub const SOUNDNESS_POINTS: usize = 1_000;
/// Slack allowed below a claimed lower bound.
pub const SOUNDNESS_SLACK: f64 = 1e-9;

/// Tolerance of the printed constants.
pub const PRINTED_TOL: f64 = 5e-4;
/// Tolerance of the root-solve consistency checks.
pub const ROOT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Constants,
    Cases,
    Extremal,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["identities", "constants", "cases", "extremal", "all"];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identities" => Ok(Suite::Identities),
            "constants" => Ok(Suite::Constants),
            "cases" => Ok(Suite::Cases),
            "extremal" => Ok(Suite::Extremal),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!(
                "unknown suite {other:?} (expected one of {})",
                Suite::NAMES.join(", ")
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            Suite::Identities => 0,
            Suite::Constants => 1,
            Suite::Cases => 2,
            Suite::Extremal => 3,
            Suite::All => 4,
        };
        f.write_str(Suite::NAMES[i])
    }
}

/// The seed in `MARGULIS_SEED`, or 0 when unset.
pub fn seed_from_env() -> Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{SEED_VAR} must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(0),
    }
}

type SuiteFn = fn(u64) -> Report;

pub fn run(suite: Suite, seed: u64) -> Report {
    let mut r = Report::new("verify");
    r.input("suite", suite.to_string());
    r.input("seed", seed.to_string());
    let parts: Vec<(&str, SuiteFn)> = match suite {
        Suite::Identities => vec![("identities", identities)],
        Suite::Constants => vec![("constants", |_| constants_suite())],
        Suite::Cases => vec![("cases", cases_suite)],
        Suite::Extremal => vec![("extremal", extremal_suite)],
        Suite::All => vec![
            ("identities", identities),
            ("constants", |_| constants_suite()),
            ("cases", cases_suite),
            ("extremal", extremal_suite),
        ],
    };
    for (name, f) in parts {
        r.absorb(name, f(seed));
    }
    r
}

// ---------------------------------------------------------------------------
// random maps

fn random_complex(rng: &mut impl Rng, r: f64) -> Complex {
    c(rng.gen_range(-r..r), rng.gen_range(-r..r))
}

/// A random map with entries in `[-2, 2] + [-2, 2]i`, rescaled to
/// determinant 1; near-singular draws are rejected.
pub fn random_map(rng: &mut impl Rng) -> MoebiusMap {
    loop {
        let m = Matrix2::new(
            random_complex(rng, 2.0),
            random_complex(rng, 2.0),
            random_complex(rng, 2.0),
            random_complex(rng, 2.0),
        );
        if m.det().norm() < 0.1 {
            continue;
        }
        if let Ok(f) = MoebiusMap::normalize(m) {
            return f;
        }
    }
}

/// A random half-turn.
pub fn random_order2(rng: &mut impl Rng) -> MoebiusMap {
    let h = random_map(rng);
    let rot = MoebiusMap::from_entries(c(0.0, 1.0), re(0.0), re(0.0), c(0.0, -1.0)).expect("det 1");
    rot.conjugate_by(&h)
}

/// A pair with the given parameters: `f` fixes `0` and `∞`, and `g` has
/// upper-right entry `b`. Needs `β_f ≠ 0` and `b ≠ 0`.
pub fn realize(p: &GroupParams, b: Complex) -> Result<(MoebiusMap, MoebiusMap)> {
    if p.beta_f.norm() <= crate::mobius::IDENTITY_TOL {
        return Err(Error::Parabolic);
    }
    if b.norm() == 0.0 {
        return Err(Error::InvalidArgument("b must be nonzero".into()));
    }
    let s = p.beta_f.sqrt();
    let lambda = (s + (s * s + 4.0).sqrt()) / 2.0;
    let f = MoebiusMap::from_entries(lambda, re(0.0), re(0.0), lambda.inv())?;
    // γ = −β_f·bc for diagonal f
    let bc = -p.gamma / p.beta_f;
    let tr = (p.beta_g + 4.0).sqrt();
    let disc = (tr * tr - (bc + 1.0) * 4.0).sqrt();
    let (a, d) = ((tr + disc) / 2.0, (tr - disc) / 2.0);
    let g = MoebiusMap::from_entries(a, b, bc / b, d)?;
    Ok((f, g))
}

// ---------------------------------------------------------------------------
// identities

/// Distance between two geodesics by minimising, along the second one, the
/// distance to the first after moving it to the `j`-axis.
pub fn geodesic_distance_numeric(l1: &Geodesic, l2: &Geodesic) -> f64 {
    let frame = l1.standard_frame().inverse();
    let l = l2.image(&frame);
    // distance from z + tj to the j-axis: sinh h = |z|/t, convex along l
    let dist = |s: f64| {
        let x = l.point_at(s);
        (x.horizontal.norm() / x.height).asinh()
    };
    golden_min(dist, -40.0, 40.0, 1e-12).1
}

/// Running maximum of relative errors for one identity.
#[derive(Default)]
struct MaxErr {
    worst: f64,
}

impl MaxErr {
    fn add(&mut self, lhs: f64, rhs: f64, scale: f64) {
        let e = (lhs - rhs).abs() / scale.max(1.0);
        if e.is_nan() {
            self.worst = f64::INFINITY;
        } else if e > self.worst {
            self.worst = e;
        }
    }

    fn add_c(&mut self, lhs: Complex, rhs: Complex) {
        self.add((lhs - rhs).norm(), 0.0, rhs.norm());
    }
}

/// Parameter identities over [`IDENTITY_PAIRS`] random pairs, and the
/// closed-form axis distance against numeric minimisation.
pub fn identities(seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = [
        "4 cosh tau = |beta + 4| + |beta|",
        "4 cos theta = |beta + 4| - |beta|",
        "m^2 = 2 cosh(2 delta) |beta|",
        "4 cosh rho = cosh(2 delta) |beta| + |beta + 4|",
        "4 cosh h(x, fx) = cosh(2 h(x, axis)) |beta| + |beta + 4|",
        "gamma(f, g^2) = gamma (beta_g + 4)",
        "beta(g^2) = beta_g (beta_g + 4)",
        "gamma(f, g f g^-1) = gamma (gamma - beta_f)",
        "beta(fg) = gamma - beta_g - 4 for f of order 2",
    ];
    let mut errs: Vec<MaxErr> = names.iter().map(|_| MaxErr::default()).collect();
    let mut axis_err = MaxErr::default();
    let mut skipped = 0usize;
    for _ in 0..IDENTITY_PAIRS {
        let f = random_map(&mut rng);
        let g = random_map(&mut rng);
        let h = random_order2(&mut rng);
        let x = HPoint {
            horizontal: random_complex(&mut rng, 2.0),
            height: rng.gen_range(-2.0f64..2.0).exp(),
        };
        let (bf, bg, gm) = (beta(&f), beta(&g), gamma(&f, &g));
        let (Ok((tau, theta)), Ok(ax_f), Ok(ax_g)) = (translation_rotation(&f), axis(&f), axis(&g))
        else {
            skipped += 1;
            continue;
        };
        let (p4, p0) = ((bf + 4.0).norm(), bf.norm());
        errs[0].add(4.0 * tau.cosh(), p4 + p0, p4 + p0);
        errs[1].add(4.0 * theta.cos(), p4 - p0, p4 + p0);
        let c2d = (2.0 * delta_from_j(&ax_f)).cosh();
        errs[2].add(matrix_norm(&f).powi(2), 2.0 * c2d * p0, 2.0 * c2d * p0);
        let rhs = c2d * p0 + p4;
        errs[3].add(4.0 * hyperbolic_norm(&f).cosh(), rhs, rhs);
        let cx = (2.0 * delta_point_axis(&x, &f).expect("axis exists")).cosh();
        let rhs = cx * p0 + p4;
        errs[4].add(4.0 * displacement(&f, &x).cosh(), rhs, rhs);
        errs[5].add_c(gamma(&f, &g.powi(2)), gm * (bg + 4.0));
        errs[6].add_c(beta(&g.powi(2)), beta_of_square(bg));
        let conj = g.compose(&f).compose(&g.inverse());
        errs[7].add_c(gamma(&f, &conj), gm * (gm - bf));
        errs[8].add_c(beta(&h.compose(&g)), gamma(&h, &g) - bg - 4.0);

        let closed = axes_distance_params(&GroupParams::new(gm, bf, bg)).expect("nonparabolic");
        let numeric = geodesic_distance_numeric(&ax_f, &ax_g);
        axis_err.add(closed, numeric, 0.0);
    }
    let mut r = Report::new("identities");
    r.result("pairs", json!(IDENTITY_PAIRS.to_string()));
    r.result("skipped", json!(skipped.to_string()));
    for (name, e) in names.iter().zip(&errs) {
        r.check_close(name, 0.0, e.worst, IDENTITY_TOL);
    }
    r.check_close("axis distance, closed form vs numeric", 0.0, axis_err.worst, AXIS_DISTANCE_TOL);
    r
}

// ---------------------------------------------------------------------------
// constants

/// The printed constants, the root-solve consistency and the `ψ` table.
#[allow(clippy::approx_constant)]
pub fn constants_suite() -> Report {
    let mut r = Report::new("constants");
    let printed: [(&str, Result<f64>, f64); 7] = [
        ("c(3)", constants::c(3), 0.1829),
        ("c(4)", constants::c(4), 0.3453),
        ("c(5)", constants::c(5), 0.3401),
        ("c(6)", constants::c(6), 0.3517),
        ("c(inf)", constants::c(Order::Infinite), 0.6931),
        ("c_F", Ok(constants::yamada_cf()), 0.2629),
        ("d(6)", constants::d(6), 0.4457),
    ];
    for (name, got, want) in printed {
        r.check_close(name, want, got.expect("valid order"), PRINTED_TOL);
    }
    r.check_close("c(6) = arccosh(17/16)", (17.0f64 / 16.0).acosh(), constants::c(6).unwrap(), ROOT_TOL);
    r.check_close(
        "d(6) = arccosh(6 - sqrt 24)",
        (6.0 - 24f64.sqrt()).acosh(),
        constants::d(6).unwrap(),
        ROOT_TOL,
    );
    for n in [3u32, 4, 5, 6, 7, 12, 100] {
        let t = constants::solve_t(n).expect("n >= 3");
        let d = constants::d(n).unwrap();
        r.check_close(&format!("arccosh(solve_t({n})) = d({n})"), d, t.acosh(), ROOT_TOL);
        let psi = constants::psi(n).unwrap();
        r.check_close(&format!("phi(cosh d({n}), {n}) = psi({n})"), psi, constants::phi(d.cosh(), n), ROOT_TOL);
    }
    for (n, want) in [(3u32, 0.8090), (4, 0.6803), (5, 0.5), (6, 0.5), (7, 0.3117)] {
        r.check_close(&format!("psi({n})"), want, constants::psi(n).unwrap(), PRINTED_TOL);
    }
    r
}

// ---------------------------------------------------------------------------
// cases

/// Per-case outcome of [`soundness`].
#[derive(Debug, Clone, PartialEq)]
pub struct SoundnessRow {
    pub case: String,
    pub pairs: usize,
    /// Smallest `max{h(x, fx), h(x, gx)} − claimed` seen.
    pub worst_margin: f64,
}

/// A `β(g)` drawn from the case region, within 8 of `−2`.
fn sample_region(spec: &CaseSpec, rng: &mut impl Rng) -> Complex {
    loop {
        let r = 8.0 * rng.gen::<f64>().sqrt();
        let z = re(-2.0) + Complex::from_polar(r, 2.0 * PI * rng.gen::<f64>());
        if spec.region.contains(z) {
            return z;
        }
    }
}

/// For `pairs` random pairs realising the parameters of the given cases,
/// checks that no point among `points` samples is moved less than the case
/// bound by both maps.
pub fn soundness(
    specs: &[CaseSpec],
    claimed: &[f64],
    seed: u64,
    pairs: usize,
    points: usize,
) -> Vec<SoundnessRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<SoundnessRow> = specs
        .iter()
        .map(|s| SoundnessRow { case: s.name.clone(), pairs: 0, worst_margin: f64::INFINITY })
        .collect();
    for k in 0..pairs {
        let i = k % specs.len();
        let spec = &specs[i];
        let bg = sample_region(spec, &mut rng);
        let b = Complex::from_polar(rng.gen_range(0.2..3.0), rng.gen_range(0.0..2.0 * PI));
        let (f, g) = realize(&GroupParams::new(spec.gamma, spec.beta_f, bg), b).expect("beta_f != 0");
        let mut worst = f64::INFINITY;
        for _ in 0..points {
            let t: f64 = rng.gen_range(-3.0f64..3.0).exp();
            let x = HPoint {
                horizontal: Complex::from_polar(2.0 * t * rng.gen::<f64>(), rng.gen_range(0.0..2.0 * PI)),
                height: t,
            };
            let m = displacement(&f, &x).max(displacement(&g, &x));
            worst = worst.min(m - claimed[i]);
        }
        rows[i].pairs += 1;
        rows[i].worst_margin = rows[i].worst_margin.min(worst);
    }
    rows
}

/// The case bounds, the spot checks, the exceptional points, the parabolic
/// and `n = 6` optima, and the soundness sample.
pub fn cases_suite(seed: u64) -> Report {
    let mut r = Report::new("cases");
    let specs = cases::builtin_cases();
    let reports = cases::run_all_cases();
    for rep in &reports {
        let name = format!("case {}", rep.name);
        let within = r.check_close(&name, rep.expected_bound, rep.solved_bound, CASE_TOLERANCE);
        r.check(
            &format!("{name} > power * c(n)"),
            &format!("> {}", num(rep.compare_value)),
            &num(rep.solved_bound),
            "strict",
            rep.solved_bound > rep.compare_value,
        );
        r.result(
            &format!("{}.bound", rep.name),
            json!({
                "solved": num(rep.solved_bound),
                "argmin": num_c(rep.argmin_beta),
                "oracle": num(rep.oracle_bound),
                "printed": num(rep.expected_bound),
            }),
        );
        if !within {
            r.result(&format!("{}.region", rep.name), json!(rep.region));
        }
        for ex in &rep.exceptions {
            let (expected, got) = match (&ex.disposition, ex.bound) {
                (Disposition::Excluded(why), _) => ("excluded".to_string(), why.clone()),
                (_, Some(b)) => (format!("> {}", num(rep.compare_value)), num(b)),
                (_, None) => ("bound".to_string(), "none".to_string()),
            };
            r.check(
                &format!("{name} exception {}", num_c(ex.beta)),
                &expected,
                &got,
                "-",
                ex.passes,
            );
        }
    }
    for sc in cases::lemma_spot_checks() {
        let cn = constants::c(sc.compare_to).expect("valid order");
        r.check_close(&format!("spot {}", sc.name), sc.printed, sc.bound, CASE_TOLERANCE);
        r.check(
            &format!("spot {} > c({})", sc.name, sc.compare_to),
            &format!("> {}", num(cn)),
            &num(sc.bound),
            "strict",
            sc.bound > cn,
        );
    }
    let pm = cases::parabolic_min_t();
    r.check("parabolic min t", "1.25000000000", &num(pm.t_min), "exact", pm.t_min == 1.25);
    r.check_close("parabolic min t, bisection", 1.25, cases::parabolic_min_t_numeric(), 1e-6);
    r.check_close("parabolic min t, 3-variable grid", 1.25, parabolic_grid_oracle(), 1e-6);
    r.check_close("n = 6 joint minimum", 17.0 / 16.0, cases::n6_joint_min().t, 1e-12);

    let claimed: Vec<f64> = reports.iter().map(|x| x.solved_bound).collect();
    for row in soundness(&specs, &claimed, seed, SOUNDNESS_PAIRS, SOUNDNESS_POINTS) {
        r.check(
            &format!("soundness {} ({} pairs)", row.case, row.pairs),
            &format!(">= -{}", num(SOUNDNESS_SLACK)),
            &num(row.worst_margin),
            &num(SOUNDNESS_SLACK),
            row.worst_margin >= -SOUNDNESS_SLACK,
        );
    }
    r
}

/// Minimises `max{(u² + 2)/2, (b² + c²)/2, (2 + (c − b)²)/2}` over
/// `u, b, c ≥ 0` with `cu ≥ 1` on a shrinking grid.
pub fn parabolic_grid_oracle() -> f64 {
    let obj = |u: f64, b: f64, cc: f64| {
        if cc * u < 1.0 || u < 0.0 || b < 0.0 || cc < 0.0 {
            return f64::INFINITY;
        }
        ((u * u + 2.0) / 2.0).max((b * b + cc * cc) / 2.0).max((2.0 + (cc - b).powi(2)) / 2.0)
    };
    const N: usize = 41;
    let (mut centre, mut half) = ([1.5, 1.5, 1.5], 1.5);
    let mut best = f64::INFINITY;
    for _ in 0..80 {
        let mut step_best = (f64::INFINITY, centre);
        for i in 0..N {
            for j in 0..N {
                for k in 0..N {
                    let at = |c0: f64, m: usize| c0 - half + 2.0 * half * m as f64 / (N - 1) as f64;
                    let p = [at(centre[0], i), at(centre[1], j), at(centre[2], k)];
                    let v = obj(p[0], p[1], p[2]);
                    if v < step_best.0 {
                        step_best = (v, p);
                    }
                }
            }
        }
        best = best.min(step_best.0);
        centre = step_best.1;
        half *= 0.6;
    }
    best
}

// ---------------------------------------------------------------------------
// extremal

/// Attainment of `d(n)` for `n = 3..=12`, the orders 6 and 3 pair and the
/// modular pair.
pub fn extremal_suite(seed: u64) -> Report {
    let mut r = Report::new("extremal");
    for n in 3..=12u32 {
        let cfg = extremal::extremal_elliptic_config(n).expect("n >= 3");
        let chk = extremal::equality_check(&cfg, seed);
        let d = constants::d(n).unwrap();
        r.check_close(&format!("n = {n}: rho(f) = d({n})"), d, chk.rho_f, EQUALITY_TOL);
        r.check_close(&format!("n = {n}: rho(g) = rho(f)"), chk.rho_f, chk.rho_g, EQUALITY_TOL);
        r.check(
            &format!("n = {n}: no nearby point does better"),
            &format!(">= {}", num(cfg.claimed - EQUALITY_TOL)),
            &num(chk.probe_min),
            &num(EQUALITY_TOL),
            chk.passes,
        );
    }
    let cfg = extremal::orders_6_3_config();
    let chk = extremal::equality_check(&cfg, seed);
    let c6 = constants::c(6).unwrap();
    r.check_close("orders 6 and 3: rho(f) = c(6)", c6, chk.rho_f, EQUALITY_TOL);
    r.check_close("orders 6 and 3: rho(g) = c(6)", c6, chk.rho_g, EQUALITY_TOL);
    r.check("orders 6 and 3: local minimum", "true", &chk.passes.to_string(), "-", chk.passes);

    let cfg = extremal::modular_pair();
    let (rf, rg) = cfg.displacements();
    let cinf = 1.25f64.acosh();
    r.check_close("modular: rho(f) = arccosh(5/4)", cinf, rf, 1e-9);
    r.check_close("modular: rho(g) = arccosh(5/4)", cinf, rg, 1e-9);
    let chk = extremal::equality_check(&cfg, seed);
    r.check("modular: local minimum", "true", &chk.passes.to_string(), "-", chk.passes);
    r
}

/// Classification-driven lower bound for a pair: `c(n)` when one generator
/// is elliptic of order `n ≥ 3` (the larger bound when both are), `c(∞)`
/// when one is parabolic.
pub fn applicable_bound(f: &MoebiusMap, g: &MoebiusMap) -> Option<(Order, f64)> {
    use crate::mobius::{classify, ElementClass};
    let order_of = |m: &MoebiusMap| match classify(m) {
        ElementClass::Parabolic => Some(Order::Infinite),
        ElementClass::Elliptic { order: Some(n), .. } if n >= 3 => Some(Order::Finite(n)),
        _ => None,
    };
    if gamma(f, g).norm() <= crate::mobius::IDENTITY_TOL {
        // a common fixed point makes the group elementary
        return None;
    }
    [order_of(f), order_of(g)]
        .into_iter()
        .flatten()
        .map(|o| (o, constants::c(o).expect("valid order")))
        .max_by(|a, b| a.1.total_cmp(&b.1))
}

/// Lower bound on `max{ρ(f), ρ(g)}` from the parameters alone.
pub fn joint_bound(f: &MoebiusMap, g: &MoebiusMap) -> f64 {
    joint_rho_lower(&GroupParams::of(f, g)).rho_lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfspace::BoundaryPoint;

    #[test]
    fn realize_matches_parameters() {
        let p = GroupParams::new(c(-1.0, 0.5), re(-3.0), c(-2.5, 0.6));
        let (f, g) = realize(&p, c(0.7, -0.2)).unwrap();
        let q = GroupParams::of(&f, &g);
        assert!((q.gamma - p.gamma).norm() < 1e-12);
        assert!((q.beta_f - p.beta_f).norm() < 1e-12);
        assert!((q.beta_g - p.beta_g).norm() < 1e-12);
    }

    #[test]
    fn numeric_axis_distance() {
        let l1 = Geodesic::new(BoundaryPoint::Finite(re(0.0)), BoundaryPoint::Infinity).unwrap();
        let l2 = Geodesic::new(BoundaryPoint::Finite(re(-1.0)), BoundaryPoint::Finite(re(1.0))).unwrap();
        assert!(geodesic_distance_numeric(&l1, &l2) < 1e-9);
        // radius 1 about 3: sinh h = (3 + cos φ)/sin φ is least at cos φ = −1/3
        let l3 = Geodesic::new(BoundaryPoint::Finite(re(2.0)), BoundaryPoint::Finite(re(4.0))).unwrap();
        let d = geodesic_distance_numeric(&l1, &l3);
        assert!((d - 3f64.acosh()).abs() < 1e-9, "{d}");
    }

    #[test]
    fn suites_parse() {
        for s in Suite::NAMES {
            assert_eq!(s.parse::<Suite>().unwrap().to_string(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn parabolic_grid() {
        assert!((parabolic_grid_oracle() - 1.25).abs() < 1e-6);
    }

    #[test]
    fn identity_pair_has_no_bound() {
        let id = MoebiusMap::identity();
        assert!(applicable_bound(&id, &id).is_none());
        let m = extremal::modular_pair();
        let (o, b) = applicable_bound(&m.f, &m.g).unwrap();
        assert_eq!(o, Order::Infinite);
        assert!((b - 1.25f64.acosh()).abs() < 1e-15);
    }
}
