//! Outcome type shared by the verification sweeps.
//!
//! Every `verify_*` / `check_*` routine drives some identity over a finite
//! parameter box and reports back the same way: how many cases ran, and the
//! exact coordinates of any case that broke, with both sides rendered as
//! decimal strings. Reports are deterministic; violations are kept sorted by
//! their coordinate tuple.

use std::fmt;

/// One failed case: named coordinates plus both sides of the comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub coords: Vec<(&'static str, i64)>,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, value)) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{name}={value}")?;
        }
        write!(f, ": expected {}, actual {}", self.expected, self.actual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub range: String,
    pub cases: u64,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, range: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            range: range.into(),
            cases: 0,
            violations: Vec::new(),
        }
    }

    pub fn record(
        &mut self,
        coords: Vec<(&'static str, i64)>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        ok: bool,
    ) {
        self.cases += 1;
        if !ok {
            self.violations.push(Violation {
                coords,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn sort_violations(&mut self) {
        self.violations
            .sort_by(|a, b| a.coords.iter().map(|c| c.1).cmp(b.coords.iter().map(|c| c.1)));
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("check: {}\n", self.check));
        out.push_str(&format!("range: {}\n", self.range));
        out.push_str(&format!("cases: {}\n", self.cases));
        out.push_str(&format!("violations: {}\n", self.violations.len()));
        for v in &self.violations {
            out.push_str(&format!("  {v}\n"));
        }
        out.push_str(&format!(
            "status: {}\n",
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }

    /// CSV rows under the fixed header `check,n,d,m,expected,actual,status`.
    /// Coordinates are matched to the `n`, `d`, `m` columns by name; checks
    /// indexed by other coordinates leave unmatched columns empty.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("check,n,d,m,expected,actual,status\n");
        let col = |v: &Violation, name: &str| -> String {
            v.coords
                .iter()
                .find(|(c, _)| *c == name)
                .map(|(_, value)| value.to_string())
                .unwrap_or_default()
        };
        if self.passed() {
            out.push_str(&format!("{},,,,,,pass\n", self.check));
        } else {
            for v in &self.violations {
                out.push_str(&format!(
                    "{},{},{},{},{},{},fail\n",
                    self.check,
                    col(v, "n"),
                    col(v, "d"),
                    col(v, "m"),
                    v.expected,
                    v.actual
                ));
            }
        }
        out
    }
}
