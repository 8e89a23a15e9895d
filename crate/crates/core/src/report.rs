//! Structured verification reports.
//!
//! Verification routines never assert; they return a [`Report`] with one
//! [`Check`] per identity so the CLI can render it and tests can inspect
//! it. `Flagged` marks a confirmed disagreement between a verified formula
//! and a misprinted reference formula; it never counts as a failure.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Flagged,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        status: Status,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            status,
            detail: detail.into(),
        }
    }

    pub fn verdict(
        id: impl Into<String>,
        description: impl Into<String>,
        ok: bool,
        detail: impl Into<String>,
    ) -> Self {
        Self::new(id, description, Status::from_bool(ok), detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    #[serde(rename = "paper_anchors")]
    pub anchors: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
            anchors: Vec::new(),
        }
    }

    /// Appends a check. Ids are fixed strings chosen by the verifiers, so a
    /// duplicate is a programming error.
    pub fn push(&mut self, check: Check) {
        assert!(
            self.checks.iter().all(|c| c.id != check.id),
            "duplicate check id `{}`",
            check.id
        );
        self.checks.push(check);
    }

    pub fn anchor(&mut self, a: impl Into<String>) {
        let a = a.into();
        if !self.anchors.contains(&a) {
            self.anchors.push(a);
        }
    }

    /// Concatenates several suites into one, keeping ids unique.
    pub fn merge(suite: impl Into<String>, parts: impl IntoIterator<Item = Report>) -> Self {
        let mut out = Report::new(suite);
        for part in parts {
            for c in part.checks {
                out.push(c);
            }
            for a in part.anchors {
                out.anchor(a);
            }
        }
        out
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn ids_unique(&self) -> bool {
        let ids: BTreeSet<&str> = self.checks.iter().map(|c| c.id.as_str()).collect();
        ids.len() == self.checks.len()
    }

    pub fn find(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Flagged => "FLAG",
            };
            let _ = writeln!(out, "[{tag}] {}: {}", c.id, c.description);
            if !c.detail.is_empty() {
                for line in c.detail.lines() {
                    let _ = writeln!(out, "       {line}");
                }
            }
        }
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} flagged",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Flagged)
        );
        if !self.anchors.is_empty() {
            let _ = writeln!(out, "anchors:");
            for a in &self.anchors {
                let _ = writeln!(out, "  - {a}");
            }
        }
        out
    }
}
