//! Certification reports: named checks with witnesses for failures.
//!
//! Axiom verifiers across the workspace return these instead of booleans so
//! a failed run names the first offending tuple.

use std::fmt;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// An ordered list of named checks; deterministic given deterministic inputs.
#[derive(Clone, Debug, Default)]
pub struct Certification {
    pub checks: Vec<Check>,
}

impl Certification {
    pub fn new() -> Certification {
        Certification { checks: Vec::new() }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: false, witness: Some(witness.into()) });
    }

    /// Record a check outcome; witness is kept only on failure.
    pub fn record(&mut self, name: impl Into<String>, ok: bool, witness: impl Into<String>) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness);
        }
    }

    pub fn merge(&mut self, other: Certification) {
        self.checks.extend(other.checks);
    }

    /// Same checks with every name qualified, for merging reports from
    /// different sub-objects without name collisions.
    pub fn prefixed(mut self, prefix: &str) -> Certification {
        for c in &mut self.checks {
            c.name = format!("{prefix}:{}", c.name);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Panic with the first failure; for constructors of objects that are
    /// built programmatically and must be lawful.
    pub fn expect_pass(&self, context: &str) {
        if let Some(c) = self.checks.iter().find(|c| !c.passed) {
            panic!(
                "{context}: check '{}' failed ({})",
                c.name,
                c.witness.as_deref().unwrap_or("no witness")
            );
        }
    }
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match (&c.passed, &c.witness) {
                (true, _) => writeln!(f, "PASS {}", c.name)?,
                (false, Some(w)) => writeln!(f, "FAIL {} [{}]", c.name, w)?,
                (false, None) => writeln!(f, "FAIL {}", c.name)?,
            }
        }
        Ok(())
    }
}
