//! The machine-readable run report. Serialization is canonical: struct
//! field order is fixed, maps are avoided, and fixtures are processed
//! in name order, so identical inputs produce byte-identical reports.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub fixtures: Vec<String>,
    pub checks: Vec<Check>,
    pub exit_code: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Not applicable to this fixture kind, or explicitly beyond an
    /// enumeration budget. Never hides a failure.
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<serde_json::Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            verdict: Verdict::Pass,
            counterexample: None,
            certificate: None,
        }
    }

    pub fn fail(name: impl Into<String>, counterexample: serde_json::Value) -> Self {
        Check {
            name: name.into(),
            verdict: Verdict::Fail,
            counterexample: Some(counterexample),
            certificate: None,
        }
    }

    pub fn skip(name: impl Into<String>, why: serde_json::Value) -> Self {
        Check {
            name: name.into(),
            verdict: Verdict::Skip,
            counterexample: None,
            certificate: Some(why),
        }
    }

    pub fn with_certificate(mut self, certificate: serde_json::Value) -> Self {
        self.certificate = Some(certificate);
        self
    }
}

impl Report {
    pub fn to_canonical_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization");
        out.push('\n');
        out
    }
}
