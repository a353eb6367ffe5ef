//! Plain-text records for cases and extremal configurations.
//!
//! A file is a sequence of sections. Each section starts with `[case]` or
//! `[extremal]` and is followed by `key = value` lines. Blank lines and lines
//! starting with `#` are ignored.
//!
//! ```text
//! [case]
//! name = A4/gamma=-1
//! gamma = -1,0
//! beta_f = -3,0
//! expected = 0.2036
//! compare_to = c(3)
//! power = 1
//! sum = -1,0 ; -4,0 ; 3.23606797749979
//! disc = -2,0 ; 2 ; strict
//! exception = -1,0 ; joint-bound
//! exception = -2,0 ; excluded: S4 or A5
//!
//! [extremal]
//! name = modular
//! kind = parabolic-modular
//! f = 1 0 0.7071067811865476 0 0 0 1 0
//! g = 0 0 0.7071067811865476 0 -1.4142135623730951 0 0 0
//! witness = 0,0 ; 1
//! claimed = 0.6931471805599453
//! ```
//!
//! Complex numbers are `re,im` (a bare real is accepted), matrices are eight
//! reals in row-major order, `compare_to` is `c(n)` or `c(inf)`, and discs
//! are `center ; radius ; strict|closed`. `sum`, `disc` and `exception` may
//! repeat; every other key appears once. `power` defaults to 1.
//! Matrices must have determinant 1 to within 1e-9 and are stored unchanged.

use std::fmt::Write as _;

use crate::cases::{CaseSpec, ConstraintRegion, Disc, Disposition, ExceptionPoint, FocalSum};
use crate::constants::Order;
use crate::error::{Error, Result};
use crate::extremal::{ExtremalConfig, ExtremalKind};
use crate::halfspace::HPoint;
use crate::mobius::{Complex, Matrix2, MoebiusMap};

const DET_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalRecord {
    pub name: String,
    pub config: ExtremalConfig,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Record {
    Case(CaseSpec),
    Extremal(ExtremalRecord),
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn invalid(message: impl Into<String>) -> Error {
    Error::InvalidArgument(message.into())
}

/// A finite real.
pub fn parse_real(s: &str) -> Result<f64> {
    let s = s.trim();
    let x: f64 = s.parse().map_err(|_| invalid(format!("not a number: {s:?}")))?;
    if !x.is_finite() {
        return Err(invalid(format!("not finite: {s:?}")));
    }
    Ok(x)
}

/// `re,im` or a bare real.
pub fn parse_complex(s: &str) -> Result<Complex> {
    match s.split_once(',') {
        Some((a, b)) => Ok(Complex::new(parse_real(a)?, parse_real(b)?)),
        None => Ok(Complex::new(parse_real(s)?, 0.0)),
    }
}

/// Eight reals separated by whitespace or commas.
pub fn parse_reals8(s: &str) -> Result<[f64; 8]> {
    let parts: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    if parts.len() != 8 {
        return Err(invalid(format!("expected 8 reals, found {}", parts.len())));
    }
    let mut out = [0.0; 8];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = parse_real(p)?;
    }
    Ok(out)
}

/// `c(n)` or `c(inf)`.
pub fn parse_target(s: &str) -> Result<Order> {
    let s = s.trim();
    let inner = s
        .strip_prefix("c(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| invalid(format!("expected c(n), found {s:?}")))?;
    inner.parse()
}

fn parse_kind(s: &str) -> Result<ExtremalKind> {
    match s.trim() {
        "orders-6-3" => Ok(ExtremalKind::Orders6And3),
        "parabolic-modular" => Ok(ExtremalKind::ParabolicModular),
        other => {
            let n = other
                .strip_prefix("elliptic-sharp(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| invalid(format!("unknown kind {other:?}")))?;
            let n: u32 = n.parse().map_err(|_| invalid(format!("bad order in {other:?}")))?;
            if n < 3 {
                return Err(Error::OrderOutOfRange(n));
            }
            Ok(ExtremalKind::EllipticSharp(n))
        }
    }
}

fn fields(s: &str) -> Vec<&str> {
    s.split(';').map(str::trim).collect()
}

fn parse_disc(s: &str) -> Result<Disc> {
    let f = fields(s);
    if f.len() != 3 {
        return Err(invalid("disc needs center ; radius ; strict|closed"));
    }
    let radius = parse_real(f[1])?;
    if radius <= 0.0 {
        return Err(invalid("disc radius must be positive"));
    }
    let strict = match f[2] {
        "strict" => true,
        "closed" => false,
        o => return Err(invalid(format!("expected strict or closed, found {o:?}"))),
    };
    Ok(Disc::new(parse_complex(f[0])?, radius, strict))
}

fn parse_sum(s: &str) -> Result<FocalSum> {
    let f = fields(s);
    if f.len() != 3 {
        return Err(invalid("sum needs focus ; focus ; total"));
    }
    let sum = parse_real(f[2])?;
    if sum <= 0.0 {
        return Err(invalid("sum must be positive"));
    }
    Ok(FocalSum::new(parse_complex(f[0])?, parse_complex(f[1])?, sum))
}

fn parse_exception(s: &str) -> Result<ExceptionPoint> {
    let (point, how) = s.split_once(';').ok_or_else(|| invalid("exception needs point ; disposition"))?;
    let how = how.trim();
    let disposition = match how {
        "joint-bound" => Disposition::JointBound,
        "joint-min" => Disposition::JointMin,
        _ => match how.strip_prefix("excluded:") {
            Some(why) => Disposition::Excluded(why.trim().to_string()),
            None => return Err(invalid(format!("unknown disposition {how:?}"))),
        },
    };
    Ok(ExceptionPoint { beta: parse_complex(point)?, disposition })
}

fn parse_witness(s: &str) -> Result<HPoint> {
    let f = fields(s);
    if f.len() != 2 {
        return Err(invalid("witness needs re,im ; height"));
    }
    HPoint::new(parse_complex(f[0])?, parse_real(f[1])?)
}

fn parse_map(s: &str) -> Result<MoebiusMap> {
    MoebiusMap::from_unit_matrix(Matrix2::from_reals(parse_reals8(s)?), DET_TOL)
}

#[derive(Default)]
struct Section {
    kind: &'static str,
    line: usize,
    single: Vec<(String, String, usize)>,
    repeated: Vec<(String, String, usize)>,
}

impl Section {
    fn take(&mut self, key: &str) -> Result<(String, usize)> {
        self.take_opt(key)?
            .ok_or_else(|| err(self.line, format!("[{}] is missing `{key}`", self.kind)))
    }

    fn take_opt(&mut self, key: &str) -> Result<Option<(String, usize)>> {
        Ok(self
            .single
            .iter()
            .position(|(k, _, _)| k == key)
            .map(|i| {
                let (_, v, l) = self.single.remove(i);
                (v, l)
            }))
    }

    fn parse<T>(&mut self, key: &str, p: impl Fn(&str) -> Result<T>) -> Result<T> {
        let (v, l) = self.take(key)?;
        at(l, p(&v))
    }

    fn finish(&self) -> Result<()> {
        match self.single.first() {
            Some((k, _, l)) => Err(err(*l, format!("unknown key `{k}` in [{}]", self.kind))),
            None => Ok(()),
        }
    }
}

fn at<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        Error::InvalidArgument(m) => err(line, m),
        other => err(line, other.to_string()),
    })
}

fn build_case(mut s: Section) -> Result<CaseSpec> {
    let (name, _) = s.take("name")?;
    let gamma = s.parse("gamma", parse_complex)?;
    let beta_f = s.parse("beta_f", parse_complex)?;
    let expected_bound = s.parse("expected", parse_real)?;
    let compare_to = s.parse("compare_to", parse_target)?;
    let power = match s.take_opt("power")? {
        Some((p, l)) => at(
            l,
            p.parse::<u32>()
                .ok()
                .filter(|&p| p >= 1)
                .ok_or_else(|| invalid("power must be a positive integer")),
        )?,
        None => 1,
    };
    s.finish()?;
    let mut region = ConstraintRegion::new();
    for (k, v, l) in &s.repeated {
        match k.as_str() {
            "disc" => region.discs.push(at(*l, parse_disc(v))?),
            "sum" => region.sums.push(at(*l, parse_sum(v))?),
            "exception" => region.exceptions.push(at(*l, parse_exception(v))?),
            _ => unreachable!("only repeated keys are collected"),
        }
    }
    Ok(CaseSpec { name, gamma, beta_f, region, expected_bound, compare_to, power })
}

fn build_extremal(mut s: Section) -> Result<ExtremalRecord> {
    if let Some((k, _, l)) = s.repeated.first() {
        return Err(err(*l, format!("unknown key `{k}` in [extremal]")));
    }
    let (name, _) = s.take("name")?;
    let kind = s.parse("kind", parse_kind)?;
    let f = s.parse("f", parse_map)?;
    let g = s.parse("g", parse_map)?;
    let witness = s.parse("witness", parse_witness)?;
    let claimed = s.parse("claimed", parse_real)?;
    s.finish()?;
    Ok(ExtremalRecord { name, config: ExtremalConfig { f, g, witness, claimed, kind } })
}

fn close(section: Option<Section>, out: &mut Vec<Record>) -> Result<()> {
    if let Some(s) = section {
        out.push(match s.kind {
            "case" => Record::Case(build_case(s)?),
            _ => Record::Extremal(build_extremal(s)?),
        });
    }
    Ok(())
}

/// Parses a record file. Errors carry the 1-based line number.
pub fn parse(text: &str) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let mut current: Option<Section> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if t.starts_with('[') {
            let kind = match t {
                "[case]" => "case",
                "[extremal]" => "extremal",
                _ => return Err(err(line, format!("unknown section {t}"))),
            };
            close(current.take(), &mut out)?;
            current = Some(Section { kind, line, ..Section::default() });
            continue;
        }
        let sec = current.as_mut().ok_or_else(|| err(line, "key outside of a section"))?;
        let (k, v) = t.split_once('=').ok_or_else(|| err(line, "expected `key = value`"))?;
        let (k, v) = (k.trim().to_string(), v.trim().to_string());
        if k.is_empty() || v.is_empty() {
            return Err(err(line, "empty key or value"));
        }
        if matches!(k.as_str(), "disc" | "sum" | "exception") {
            sec.repeated.push((k, v, line));
        } else if sec.single.iter().any(|(x, _, _)| *x == k) {
            return Err(err(line, format!("duplicate key `{k}`")));
        } else {
            sec.single.push((k, v, line));
        }
    }
    close(current, &mut out)?;
    Ok(out)
}

/// Parses a file that must contain only `[case]` sections.
pub fn parse_cases(text: &str) -> Result<Vec<CaseSpec>> {
    parse(text)?
        .into_iter()
        .map(|r| match r {
            Record::Case(c) => Ok(c),
            Record::Extremal(e) => Err(invalid(format!("`{}` is not a case", e.name))),
        })
        .collect()
}

fn complex(z: Complex) -> String {
    // adding 0.0 turns −0 into 0
    format!("{},{}", z.re + 0.0, z.im + 0.0)
}

fn reals(m: &MoebiusMap) -> String {
    m.matrix().to_reals().iter().map(f64::to_string).collect::<Vec<_>>().join(" ")
}

fn kind(k: ExtremalKind) -> String {
    match k {
        ExtremalKind::EllipticSharp(n) => format!("elliptic-sharp({n})"),
        ExtremalKind::Orders6And3 => "orders-6-3".into(),
        ExtremalKind::ParabolicModular => "parabolic-modular".into(),
    }
}

fn write_case(out: &mut String, c: &CaseSpec) {
    let _ = writeln!(out, "[case]");
    let _ = writeln!(out, "name = {}", c.name);
    let _ = writeln!(out, "gamma = {}", complex(c.gamma));
    let _ = writeln!(out, "beta_f = {}", complex(c.beta_f));
    let _ = writeln!(out, "expected = {}", c.expected_bound);
    let _ = writeln!(out, "compare_to = c({})", c.compare_to);
    let _ = writeln!(out, "power = {}", c.power);
    for s in &c.region.sums {
        let _ = writeln!(out, "sum = {} ; {} ; {}", complex(s.focus1), complex(s.focus2), s.sum);
    }
    for d in &c.region.discs {
        let strict = if d.strict { "strict" } else { "closed" };
        let _ = writeln!(out, "disc = {} ; {} ; {strict}", complex(d.center), d.radius);
    }
    for e in &c.region.exceptions {
        let _ = writeln!(out, "exception = {} ; {}", complex(e.beta), e.disposition);
    }
}

fn write_extremal(out: &mut String, e: &ExtremalRecord) {
    let c = &e.config;
    let _ = writeln!(out, "[extremal]");
    let _ = writeln!(out, "name = {}", e.name);
    let _ = writeln!(out, "kind = {}", kind(c.kind));
    let _ = writeln!(out, "f = {}", reals(&c.f));
    let _ = writeln!(out, "g = {}", reals(&c.g));
    let _ = writeln!(out, "witness = {} ; {}", complex(c.witness.horizontal), c.witness.height);
    let _ = writeln!(out, "claimed = {}", c.claimed);
}

/// Writes records in the format read by [`parse`]. Reals use the shortest
/// representation that parses back to the same value.
pub fn write(records: &[Record]) -> String {
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match r {
            Record::Case(c) => write_case(&mut out, c),
            Record::Extremal(e) => write_extremal(&mut out, e),
        }
    }
    out
}

pub fn write_cases(cases: &[CaseSpec]) -> String {
    write(&cases.iter().cloned().map(Record::Case).collect::<Vec<_>>())
}
