use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Whether a suite checks proven statements or sweeps a conjecture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteKind {
    Theorem,
    Conjecture,
}

/// One input on which the two sides of a check differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub kind: SuiteKind,
    pub bound: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    pub status: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    #[serde(default)]
    pub findings: Vec<Failure>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub stats: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
    pub ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The same report with the wall time zeroed, for byte comparisons.
    pub fn without_timing(mut self) -> Report {
        self.ms = 0;
        self
    }

    pub fn summary_line(&self) -> String {
        let mut s = format!(
            "{} [{}] bound={} cases={} failures={}",
            self.suite,
            self.status,
            self.bound,
            self.cases,
            self.failures.len()
        );
        if self.kind == SuiteKind::Conjecture {
            s.push_str(&format!(" findings={}", self.findings.len()));
        }
        s
    }
}

/// Accumulator for the outcome of a batch of cases.
#[derive(Default)]
pub(crate) struct Acc {
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub findings: Vec<Failure>,
    pub stats: BTreeMap<String, u64>,
}

impl Acc {
    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn stat(&mut self, key: &str, by: u64) {
        *self.stats.entry(key.to_string()).or_insert(0) += by;
    }

    pub fn fail(
        &mut self,
        input: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
        note: &str,
    ) {
        self.failures.push(Failure {
            input: input.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            note: note.to_string(),
        });
    }

    pub fn find(
        &mut self,
        input: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
        note: &str,
    ) {
        self.findings.push(Failure {
            input: input.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            note: note.to_string(),
        });
    }

    /// Records an equality check; returns whether it held.
    pub fn check<T: PartialEq + std::fmt::Display>(
        &mut self,
        input: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
        note: &str,
    ) -> bool {
        if lhs == rhs {
            true
        } else {
            self.fail(input(), lhs, rhs, note);
            false
        }
    }

    pub fn merge(&mut self, other: Acc) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.findings.extend(other.findings);
        for (k, v) in other.stats {
            *self.stats.entry(k).or_insert(0) += v;
        }
    }

    pub fn finish(self, suite: &str, kind: SuiteKind, bound: usize, start: Instant) -> Report {
        let status = if self.failures.is_empty() {
            "pass"
        } else {
            "fail"
        };
        Report {
            suite: suite.to_string(),
            kind,
            bound,
            params: BTreeMap::new(),
            status: status.to_string(),
            cases: self.cases,
            failures: self.failures,
            findings: self.findings,
            stats: self.stats,
            details: serde_json::Value::Null,
            ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// Runs `f` on every case in parallel and merges the outcomes in input
/// order, so reports do not depend on scheduling.
pub(crate) fn run_cases<T: Sync, F: Fn(&T, &mut Acc) + Sync>(cases: &[T], f: F) -> Acc {
    let parts: Vec<Acc> = cases
        .par_iter()
        .map(|c| {
            let mut acc = Acc::default();
            f(c, &mut acc);
            acc
        })
        .collect();
    let mut out = Acc::default();
    for p in parts {
        out.merge(p);
    }
    out
}
