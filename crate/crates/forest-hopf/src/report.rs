//! Structured pass/fail reports produced by the property suites.

use serde_json::{json, Value};
use std::fmt;

/// One verified statement: an identifier, the verdict, and either a short
/// summary or a counterexample.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

/// The outcome of a named suite of checks.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub suite: String,
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport { suite: suite.into(), lines: Vec::new() }
    }

    pub fn push(&mut self, id: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.lines.push(CheckLine { id: id.into(), pass, detail: detail.into() });
    }

    /// Record an identity check: pass when no counterexample was found.
    pub fn push_outcome(&mut self, id: impl Into<String>, counterexample: Option<String>, detail_on_pass: impl Into<String>) {
        match counterexample {
            None => self.push(id, true, detail_on_pass),
            Some(ce) => self.push(id, false, ce),
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.lines.extend(other.lines);
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn counts(&self) -> (usize, usize) {
        let ok = self.lines.iter().filter(|l| l.pass).count();
        (ok, self.lines.len())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "checks": self.lines.iter().map(|l| json!({
                "id": l.id,
                "pass": l.pass,
                "detail": l.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            if line.pass {
                writeln!(f, "PASS {}", line.id)?;
            } else {
                writeln!(f, "FAIL {}: {}", line.id, line.detail)?;
            }
        }
        let (ok, total) = self.counts();
        write!(f, "suite {}: {}/{} passed", self.suite, ok, total)
    }
}
