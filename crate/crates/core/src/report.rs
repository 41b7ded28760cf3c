//! Pass/fail reports for identity checks.

use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Canonical text of the difference of the two sides (`0` on success).
    pub difference: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &str, pass: bool, difference: impl ToString) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            difference: difference.to_string(),
        });
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `{"checks": {name: {"pass", "difference"}}, "passed": n, "total": m}`.
    pub fn to_json(&self) -> Value {
        let mut checks = Map::new();
        for c in &self.checks {
            checks.insert(
                c.name.clone(),
                json!({ "pass": c.pass, "difference": c.difference }),
            );
        }
        json!({
            "checks": checks,
            "passed": self.passed(),
            "total": self.checks.len(),
        })
    }
}
