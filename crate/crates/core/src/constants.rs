//! The constants `c(n)`, `d(n)`, `ψ(n)`, `b(n)`, `t(n)` and the Fuchsian
//! constant `c_F`.
//!
//! `c(5)` is defined through the root of `φ(t, 5) = ψ(5)`; every other value
//! has a closed form, and [`solve_t`] reproduces those as a cross-check.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::bisect_increasing;

/// Bracket and iteration count for [`solve_t`].
pub const SOLVE_T_BRACKET: (f64, f64) = (1.0, 10.0);
pub const SOLVE_T_ITERATIONS: usize = 200;

/// Elliptic order `n ≥ 3`, or `∞` for a parabolic generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    fn check(self) -> Result<Self> {
        match self {
            Order::Finite(n) if n < 3 => Err(Error::OrderOutOfRange(n)),
            o => Ok(o),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Order {
    type Err = Error;

    /// Accepts a decimal integer `n ≥ 3`, or `inf`, `infinity`, `∞`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => return Ok(Order::Infinite),
            _ => {}
        }
        let n: u32 = s
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("not an order: {s:?}")))?;
        Order::Finite(n).check()
    }
}

impl From<u32> for Order {
    fn from(n: u32) -> Self {
        Order::Finite(n)
    }
}

fn sin2(n: u32) -> f64 {
    (PI / n as f64).sin().powi(2)
}

fn require(n: u32) -> Result<()> {
    if n < 3 {
        Err(Error::OrderOutOfRange(n))
    } else {
        Ok(())
    }
}

/// `c(n)` for `n ≥ 3`, and `c(∞) = arccosh(5/4)`.
pub fn c(order: impl Into<Order>) -> Result<f64> {
    let n = match order.into().check()? {
        Order::Infinite => return Ok(1.25f64.acosh()),
        Order::Finite(n) => n,
    };
    let s5 = 5f64.sqrt();
    let s3 = 3f64.sqrt();
    Ok(match n {
        3 => ((2.0 * (8.0 + 2.0 * s5).sqrt() - (1.0 + s5)) / (6.0 - s5)).acosh(),
        4 => (((6.0 + 2.0 * s3).sqrt() - s3) / (3.0 - s3)).acosh(),
        5 => solve_t(5)?.acosh(),
        6 => (17.0f64 / 16.0).acosh(),
        _ => {
            let s = sin2(n);
            ((5.0 - 2.0 * s) / (4.0 + 2.0 * s)).acosh()
        }
    })
}

/// `d(n)`: equal to `c(n)` except `d(6) = arccosh(6 − √24)`.
pub fn d(order: impl Into<Order>) -> Result<f64> {
    match order.into().check()? {
        Order::Finite(6) => Ok((6.0 - 24f64.sqrt()).acosh()),
        o => c(o),
    }
}

/// `ψ(n) = cosh(b(n)) sin²(π/n)`, where `b(n)` is the least distance between
/// disjoint axes of order-`n` elliptics conjugate in a discrete group.
pub fn psi(n: u32) -> Result<f64> {
    require(n)?;
    Ok(match n {
        3 => (1.0 + 5f64.sqrt()) / 4.0,
        4 => (1.0 + 3f64.sqrt()) / 4.0,
        5 | 6 => 0.5,
        _ => (PI / n as f64).cos().powi(2) - 0.5,
    })
}

/// `b(n) = arccosh(ψ(n)/sin²(π/n))`.
pub fn b(n: u32) -> Result<f64> {
    let ratio = psi(n)? / sin2(n);
    assert!(ratio >= 1.0, "psi({n})/sin^2(pi/{n}) = {ratio} < 1");
    Ok(ratio.acosh())
}

/// `φ(t, n) = t(t − cos²(π/n)) + (t − 1)√((t + 1)(t + 1 − 2cos²(π/n)))`.
pub fn phi(t: f64, n: u32) -> f64 {
    let c2 = (PI / n as f64).cos().powi(2);
    t * (t - c2) + (t - 1.0) * ((t + 1.0) * (t + 1.0 - 2.0 * c2)).sqrt()
}

/// The root `t(n)` of `φ(t, n) = ψ(n)` in `[1, 10]`.
pub fn solve_t(n: u32) -> Result<f64> {
    let target = psi(n)?;
    let (lo, hi) = SOLVE_T_BRACKET;
    Ok(bisect_increasing(|t| phi(t, n), target, lo, hi, SOLVE_T_ITERATIONS))
}

/// Yamada's constant for Fuchsian groups.
pub fn yamada_cf() -> f64 {
    let c1 = (PI / 7.0).cos();
    let c2 = (2.0 * PI / 7.0).cos();
    2.0 * ((2.0 * c2 - 1.0) / (8.0 * c1 + 7.0)).sqrt().asinh()
}

/// `c(3)` in its arccosh form and in the arcsinh form that parallels
/// [`yamada_cf`]; returns `(lhs, rhs)`.
pub fn c3_alternative_identity() -> (f64, f64) {
    let lhs = c(3).expect("3 is a valid order");
    let k = (2.0 * PI / 5.0).cos();
    let rhs = 2.0 * ((4.0 * k - 1.0) / (4.0 * (8.0 * k + 10.0).sqrt() + 14.0)).sqrt().asinh();
    (lhs, rhs)
}

/// One row of the constant table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantTable {
    pub n: Order,
    pub c_n: f64,
    pub d_n: f64,
    pub psi_n: f64,
    pub b_n: f64,
    pub t_n: f64,
}

/// The table row for `order`. For `∞` the entries are the limits:
/// `ψ = 1/2`, `b = ∞`, `t = 5/4`.
pub fn constant_table(order: impl Into<Order>) -> Result<ConstantTable> {
    let order = order.into().check()?;
    let c_n = c(order)?;
    let d_n = d(order)?;
    Ok(match order {
        Order::Infinite => ConstantTable {
            n: order,
            c_n,
            d_n,
            psi_n: 0.5,
            b_n: f64::INFINITY,
            t_n: 1.25,
        },
        Order::Finite(n) => ConstantTable {
            n: order,
            c_n,
            d_n,
            psi_n: psi(n)?,
            b_n: b(n)?,
            t_n: solve_t(n)?,
        },
    })
}

/// The same constants recomputed with 192-bit floats and reported to 50
/// significant digits.
pub mod hp {
    use astro_float::{BigFloat, Consts, Radix, RoundingMode};

    use crate::error::{Error, Result};

    const P: usize = 192;
    const RM: RoundingMode = RoundingMode::ToEven;
    pub const DIGITS: usize = 50;

    struct Ctx {
        cc: Consts,
    }

    impl Ctx {
        fn new() -> Self {
            Ctx { cc: Consts::new().expect("astro-float constant cache") }
        }

        fn n(&self, x: i64) -> BigFloat {
            BigFloat::from_i64(x, P)
        }

        fn sqrt(&self, x: &BigFloat) -> BigFloat {
            x.sqrt(P, RM)
        }

        fn acosh(&mut self, x: &BigFloat) -> BigFloat {
            x.acosh(P, RM, &mut self.cc)
        }

        fn asinh(&mut self, x: &BigFloat) -> BigFloat {
            x.asinh(P, RM, &mut self.cc)
        }

        fn cos_pi_over(&mut self, k: i64, n: i64) -> BigFloat {
            let pi = self.cc.pi(P, RM);
            let a = pi.mul(&self.n(k), P, RM).div(&self.n(n), P, RM);
            a.cos(P, RM, &mut self.cc)
        }

        fn cos2(&mut self, n: u32) -> BigFloat {
            let c = self.cos_pi_over(1, n as i64);
            c.mul(&c, P, RM)
        }

        fn psi(&mut self, n: u32) -> BigFloat {
            let one = self.n(1);
            match n {
                3 => one.add(&self.sqrt(&self.n(5)), P, RM).div(&self.n(4), P, RM),
                4 => one.add(&self.sqrt(&self.n(3)), P, RM).div(&self.n(4), P, RM),
                5 | 6 => one.div(&self.n(2), P, RM),
                _ => self.cos2(n).sub(&one.div(&self.n(2), P, RM), P, RM),
            }
        }

        fn phi(&self, t: &BigFloat, c2: &BigFloat) -> BigFloat {
            let one = self.n(1);
            let tp1 = t.add(&one, P, RM);
            let a = t.mul(&t.sub(c2, P, RM), P, RM);
            let inner = tp1.mul(&tp1.sub(&c2.mul(&self.n(2), P, RM), P, RM), P, RM);
            a.add(&t.sub(&one, P, RM).mul(&self.sqrt(&inner), P, RM), P, RM)
        }

        fn solve_t(&mut self, n: u32) -> BigFloat {
            let c2 = self.cos2(n);
            let target = self.psi(n);
            let mut lo = self.n(1);
            let mut hi = self.n(10);
            let half = self.n(1).div(&self.n(2), P, RM);
            for _ in 0..P + 8 {
                let mid = lo.add(&hi, P, RM).mul(&half, P, RM);
                if self.phi(&mid, &c2).cmp(&target) == Some(-1) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            lo.add(&hi, P, RM).mul(&half, P, RM)
        }

        fn c(&mut self, n: u32) -> BigFloat {
            let one = self.n(1);
            let s5 = self.sqrt(&self.n(5));
            let s3 = self.sqrt(&self.n(3));
            let arg = match n {
                3 => {
                    let r = self.sqrt(&self.n(8).add(&s5.mul(&self.n(2), P, RM), P, RM));
                    r.mul(&self.n(2), P, RM)
                        .sub(&one.add(&s5, P, RM), P, RM)
                        .div(&self.n(6).sub(&s5, P, RM), P, RM)
                }
                4 => {
                    let r = self.sqrt(&self.n(6).add(&s3.mul(&self.n(2), P, RM), P, RM));
                    r.sub(&s3, P, RM).div(&self.n(3).sub(&s3, P, RM), P, RM)
                }
                5 => self.solve_t(5),
                6 => self.n(17).div(&self.n(16), P, RM),
                _ => {
                    let s = one.sub(&self.cos2(n), P, RM);
                    let two_s = s.mul(&self.n(2), P, RM);
                    self.n(5).sub(&two_s, P, RM).div(&self.n(4).add(&two_s, P, RM), P, RM)
                }
            };
            self.acosh(&arg)
        }

        fn yamada_cf(&mut self) -> BigFloat {
            let c1 = self.cos_pi_over(1, 7);
            let c2 = self.cos_pi_over(2, 7);
            let num = c2.mul(&self.n(2), P, RM).sub(&self.n(1), P, RM);
            let den = c1.mul(&self.n(8), P, RM).add(&self.n(7), P, RM);
            let r = self.sqrt(&num.div(&den, P, RM));
            self.asinh(&r).mul(&self.n(2), P, RM)
        }

        fn format(&mut self, x: &BigFloat) -> String {
            let s = x.format(Radix::Dec, RM, &mut self.cc).unwrap_or_else(|_| "NaN".into());
            round_scientific(&s, DIGITS)
        }
    }

    /// Rounds a scientific-notation decimal string (as produced by
    /// astro-float, e.g. `1.829...e-1`) to `digits` significant digits.
    fn round_scientific(s: &str, digits: usize) -> String {
        let (mant, exp) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
            None => (s, 0),
        };
        let neg = mant.starts_with('-');
        let ds: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
        let point = mant.trim_start_matches('-').find('.').unwrap_or(ds.len()) as i64;
        let mut lead = 0;
        while lead < ds.len() && ds[lead] == 0 {
            lead += 1;
        }
        if lead == ds.len() {
            return "0".into();
        }
        let mut kept: Vec<u8> = ds[lead..].iter().copied().chain(std::iter::repeat(0)).take(digits + 1).collect();
        let mut e10 = exp + point - lead as i64 - 1;
        let round_up = kept[digits] >= 5;
        kept.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    kept.insert(0, 1);
                    kept.truncate(digits);
                    e10 += 1;
                    break;
                }
                i -= 1;
                if kept[i] == 9 {
                    kept[i] = 0;
                } else {
                    kept[i] += 1;
                    break;
                }
            }
        }
        let body: String = kept.iter().map(|d| char::from(b'0' + d)).collect();
        format!("{}{}.{}e{}", if neg { "-" } else { "" }, &body[..1], &body[1..], e10)
    }

    /// A named constant at 50 significant digits, with its double-precision
    /// value for comparison.
    #[derive(Debug, Clone, PartialEq)]
    pub struct HpValue {
        pub name: String,
        pub digits: String,
        pub approx: f64,
    }

    fn value(ctx: &mut Ctx, name: &str, x: &BigFloat) -> HpValue {
        let digits = ctx.format(x);
        let approx = digits.parse().unwrap_or(f64::NAN);
        HpValue { name: name.to_string(), digits, approx }
    }

    /// `c(n)` at high precision for `n ≥ 3`.
    pub fn c(n: u32) -> Result<HpValue> {
        if n < 3 {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut ctx = Ctx::new();
        let x = ctx.c(n);
        Ok(value(&mut ctx, &format!("c({n})"), &x))
    }

    /// `t(n)` at high precision.
    pub fn solve_t(n: u32) -> Result<HpValue> {
        if n < 3 {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut ctx = Ctx::new();
        let x = ctx.solve_t(n);
        Ok(value(&mut ctx, &format!("t({n})"), &x))
    }

    /// The acceptance table: `c(3..=7)`, `c(∞)`, `c_F`, `d(6)` and
    /// `ψ(3..=7)`.
    pub fn acceptance_table() -> Vec<HpValue> {
        let mut ctx = Ctx::new();
        let mut out = Vec::new();
        for n in 3..=7 {
            let x = ctx.c(n);
            out.push(value(&mut ctx, &format!("c({n})"), &x));
        }
        let inf = ctx.acosh(&ctx.n(5).div(&ctx.n(4), P, RM));
        out.push(value(&mut ctx, "c(inf)", &inf));
        let cf = ctx.yamada_cf();
        out.push(value(&mut ctx, "c_F", &cf));
        let d6arg = ctx.n(6).sub(&ctx.sqrt(&ctx.n(24)), P, RM);
        let d6 = ctx.acosh(&d6arg);
        out.push(value(&mut ctx, "d(6)", &d6));
        for n in 3..=7 {
            let x = ctx.psi(n);
            out.push(value(&mut ctx, &format!("psi({n})"), &x));
        }
        out
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn rounding() {
            assert_eq!(round_scientific("1.2345e-1", 3), "1.23e-1");
            assert_eq!(round_scientific("9.996e0", 3), "1.00e1");
            assert_eq!(round_scientific("0.0012345", 2), "1.2e-3");
            assert_eq!(round_scientific("-123.45", 4), "-1.235e2");
        }

        #[test]
        fn matches_double_precision() {
            for v in acceptance_table() {
                let expect = match v.name.as_str() {
                    "c(inf)" => super::super::c(super::super::Order::Infinite).unwrap(),
                    "c_F" => super::super::yamada_cf(),
                    "d(6)" => super::super::d(6).unwrap(),
                    s if s.starts_with("psi(") => super::super::psi(s[4..5].parse().unwrap()).unwrap(),
                    s => super::super::c(s[2..3].parse::<u32>().unwrap()).unwrap(),
                };
                assert!((v.approx - expect).abs() < 1e-13, "{} {} {}", v.name, v.digits, expect);
                assert_eq!(v.digits.split('e').next().unwrap().len(), DIGITS + 1);
            }
        }

        #[test]
        fn known_digits() {
            // arccosh(17/16) = ln(17/16 + sqrt(33)/16)
            let v = c(6).unwrap();
            assert!(v.digits.starts_with("3.5173739004326"), "{}", v.digits);
            let t6 = solve_t(6).unwrap();
            assert!(t6.digits.starts_with("1.1010205144336438"), "{}", t6.digits);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn order_parsing() {
        assert_eq!("3".parse::<Order>().unwrap(), Order::Finite(3));
        assert_eq!("inf".parse::<Order>().unwrap(), Order::Infinite);
        assert_eq!("∞".parse::<Order>().unwrap(), Order::Infinite);
        assert!(matches!("2".parse::<Order>(), Err(Error::OrderOutOfRange(2))));
        assert!("x".parse::<Order>().is_err());
        assert_eq!(Order::Infinite.to_string().parse::<Order>().unwrap(), Order::Infinite);
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn printed_constants() {
        approx(c(3).unwrap(), 0.1829, 5e-4);
        approx(c(4).unwrap(), 0.3453, 5e-4);
        approx(c(5).unwrap(), 0.3401, 5e-4);
        approx(c(6).unwrap(), 0.3517, 5e-4);
        approx(c(Order::Infinite).unwrap(), 0.6931, 5e-4);
        approx(d(6).unwrap(), 0.4457, 5e-4);
        approx(yamada_cf(), 0.2629, 5e-4);
        assert!(c(2).is_err());
    }

    #[test]
    fn constants_match_thirty_digit_values() {
        approx(c(3).unwrap(), 0.182_972_609_237_272, 1e-14);
        approx(c(4).unwrap(), 0.345_375_748_292_117, 1e-14);
        approx(c(5).unwrap(), 0.340_107_189_757_329, 1e-13);
        approx(c(7).unwrap(), 0.334_395_172_866_447, 1e-14);
        approx(yamada_cf(), 0.262_934_492_152_841, 1e-14);
    }

    #[test]
    fn psi_and_b() {
        approx(psi(3).unwrap(), 0.8090, 5e-4);
        approx(psi(5).unwrap(), 0.5, 0.0);
        approx(psi(7).unwrap(), 0.3117, 5e-4);
        approx(b(3).unwrap(), 0.3942, 5e-4);
        approx(b(5).unwrap(), (0.5 / (PI / 5.0).sin().powi(2)).acosh(), 1e-15);
        approx(b(6).unwrap(), 2f64.acosh(), 1e-15);
        assert!(psi(2).is_err());
    }

    #[test]
    fn phi_examples() {
        for n in 3..20 {
            approx(phi(1.0, n), sin2(n), 1e-15);
        }
        approx(phi(6.0 - 24f64.sqrt(), 6), 0.5, 1e-14);
        approx(phi(c(3).unwrap().cosh(), 3), psi(3).unwrap(), 1e-4);
    }

    #[test]
    fn phi_is_increasing() {
        for n in 3..=12 {
            let mut prev = phi(1.0, n);
            for i in 1..=20_000 {
                let v = phi(1.0 + 9.0 * i as f64 / 20_000.0, n);
                assert!(v > prev, "n={n} i={i}");
                prev = v;
            }
        }
    }

    #[test]
    fn solve_t_matches_d() {
        approx(solve_t(6).unwrap(), 6.0 - 24f64.sqrt(), 1e-14);
        for n in [3, 4, 5, 6, 7, 12, 100] {
            let t = solve_t(n).unwrap();
            approx(t.acosh(), d(n).unwrap(), 1e-9);
            approx(phi(t, n), psi(n).unwrap(), 1e-12);
        }
        approx(solve_t(5).unwrap(), 1.0583, 1e-4);
    }

    #[test]
    fn c_and_d_relations() {
        for n in 3..=100 {
            if n == 6 {
                assert!(d(n).unwrap() > c(n).unwrap());
            } else {
                assert_eq!(d(n).unwrap(), c(n).unwrap());
            }
        }
    }

    #[test]
    fn large_order_bound_and_limit() {
        for n in 7..=10_000 {
            assert!(c(n).unwrap() >= 0.3343, "n={n}");
        }
        approx(c(1_000_000).unwrap(), 1.25f64.acosh(), 1e-4);
    }

    #[test]
    fn fuchsian_and_alternative_forms() {
        let cf = yamada_cf();
        assert!(cf > 0.0 && cf > c(3).unwrap());
        let (l, r) = c3_alternative_identity();
        approx(l, r, 1e-12);
        approx(l, solve_t(3).unwrap().acosh(), 1e-9);
    }

    #[test]
    fn table_rows() {
        for n in [3u32, 4, 5, 6, 7, 12] {
            let row = constant_table(n).unwrap();
            assert!(row.c_n <= row.d_n);
            approx(row.t_n, row.d_n.cosh(), 1e-12);
            assert!(row.c_n > 0.0 && row.psi_n > 0.0 && row.b_n > 0.0);
        }
        let inf = constant_table(Order::Infinite).unwrap();
        approx(inf.t_n, inf.c_n.cosh(), 1e-15);
        assert!(inf.b_n.is_infinite());
    }
}
