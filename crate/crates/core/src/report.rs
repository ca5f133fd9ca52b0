//! Verification reports: one [`ClaimReport`] per checked statement.

use serde::Serialize;
use serde_json::Value;

/// Schema tag carried by every JSON document the crate emits.
pub const SCHEMA: &str = "parideal/1";

/// Counterexamples kept per claim; the count keeps going past this.
const MAX_RECORDED: usize = 25;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ClaimReport {
    pub claim: String,
    pub instances_checked: u64,
    pub failure_count: u64,
    pub failures: Vec<Value>,
}

impl ClaimReport {
    pub fn new(claim: impl Into<String>) -> Self {
        Self {
            claim: claim.into(),
            instances_checked: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Counts one instance and records `payload` if `ok` is false.
    pub fn check(&mut self, ok: bool, payload: impl FnOnce() -> Value) {
        self.instances_checked += 1;
        if !ok {
            self.fail(payload());
        }
    }

    pub fn fail(&mut self, payload: Value) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(payload);
        }
    }

    /// Folds another partial report for the same claim into this one.
    pub fn merge(&mut self, other: ClaimReport) {
        self.instances_checked += other.instances_checked;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(f);
            }
        }
    }

    pub fn merged(claim: impl Into<String>, parts: impl IntoIterator<Item = ClaimReport>) -> Self {
        let mut out = Self::new(claim);
        for p in parts {
            out.merge(p);
        }
        out
    }
}

/// A named group of claims, e.g. everything the `lemmas` suite checks on B3.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: String,
    pub system: String,
    pub passed: bool,
    pub claims: Vec<ClaimReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(
        suite: impl Into<String>,
        system: impl Into<String>,
        claims: Vec<ClaimReport>,
    ) -> Self {
        let passed = claims.iter().all(ClaimReport::passed);
        Self {
            schema: SCHEMA,
            suite: suite.into(),
            system: system.into(),
            passed,
            claims,
            notes: Vec::new(),
        }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    pub fn claim(&self, name: &str) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.claim == name)
    }
}
