//! Machine-readable reports: named inputs, results and pass/fail checks.
//!
//! Every number is stored as a decimal string with 12 significant digits, so
//! emitting, parsing and re-emitting a report is byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Significant digits used for every reported number.
pub const SIG_DIGITS: usize = 12;

/// `x` with 12 significant digits: positional notation for exponents in
/// `[-4, 12)`, scientific otherwise.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return format!("0.{}", "0".repeat(SIG_DIGITS - 1));
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mant, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(char::is_ascii_digit).collect();
    let sign = if neg { "-" } else { "" };
    if !(-4..12).contains(&exp) {
        return format!("{sign}{}.{}e{exp}", &digits[..1], &digits[1..]);
    }
    if exp >= 0 {
        let (int, frac) = digits.split_at(exp as usize + 1);
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        format!("{sign}0.{}{digits}", "0".repeat((-exp - 1) as usize))
    }
}

/// A complex number as `re,im` with 12 significant digits each.
pub fn num_c(z: crate::Complex) -> String {
    format!("{},{}", num(z.re), num(z.im))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub tolerance: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), pass: true, ..Default::default() }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: Value) -> &mut Self {
        self.results.insert(key.into(), value);
        self
    }

    /// Records `|got − expected| ≤ tol`.
    pub fn check_close(&mut self, name: &str, expected: f64, got: f64, tol: f64) -> bool {
        let pass = (got - expected).abs() <= tol;
        self.push(Check {
            name: name.into(),
            expected: num(expected),
            got: num(got),
            tolerance: num(tol),
            pass,
        })
    }

    /// Records a check whose outcome was decided by the caller.
    pub fn check(&mut self, name: &str, expected: &str, got: &str, tolerance: &str, pass: bool) -> bool {
        self.push(Check {
            name: name.into(),
            expected: expected.into(),
            got: got.into(),
            tolerance: tolerance.into(),
            pass,
        })
    }

    fn push(&mut self, c: Check) -> bool {
        let pass = c.pass;
        self.pass &= pass;
        self.checks.push(c);
        pass
    }

    /// Appends the checks and results of `other`, prefixing result keys.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.push(c);
        }
        for (k, v) in other.results {
            self.results.insert(format!("{prefix}.{k}"), v);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k}: {v}");
        }
        for (k, v) in &self.results {
            let sep = if v.is_object() { ':' } else { '=' };
            let _ = writeln!(out, "  {k} {sep} {}", render(v));
        }
        if !self.checks.is_empty() {
            let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &self.checks {
                let _ = writeln!(
                    out,
                    "  [{}] {:width$}  expected {}  got {}  tol {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.expected,
                    c.got,
                    c.tolerance,
                );
            }
            let failed = self.failures().count();
            let _ = writeln!(
                out,
                "{}: {} of {} checks passed",
                if self.pass { "PASS" } else { "FAIL" },
                self.checks.len() - failed,
                self.checks.len()
            );
        }
        out
    }
}

/// Flat rendering of a result value: strings unquoted, objects as
/// `key=value` pairs.
fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(render).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", render(v)))
            .collect::<Vec<_>>()
            .join("  "),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn number_format() {
        assert_eq!(num(0.182_972_609_237_272), "0.182972609237");
        assert_eq!(num(1.25), "1.25000000000");
        assert_eq!(num(-2.5e-3), "-0.00250000000000");
        assert_eq!(num(123456789012.0), "123456789012");
        assert_eq!(num(1.5e13), "1.50000000000e13");
        assert_eq!(num(1e-7), "1.00000000000e-7");
        assert_eq!(num(1e-5), "1.00000000000e-5");
        assert_eq!(num(1e-4), "0.000100000000000");
        assert_eq!(num(0.0), "0.00000000000");
        assert_eq!(num(f64::INFINITY), "inf");
        assert_eq!(num(9.999_999_999_999_9), "10.0000000000");
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let mut r = Report::new("constants");
        r.input("n", "3");
        r.result("c", json!(num(0.1829)));
        r.result("row", json!({"b": num(2.0), "a": [num(1.0)]}));
        r.check_close("c(3)", 0.1829, 0.182_972_609_237_272, 5e-4);
        r.check("flag", "true", "false", "-", false);
        let s = r.to_json();
        let back = Report::from_json(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
        assert!(r.to_text().contains("[FAIL] flag"));
    }
}
