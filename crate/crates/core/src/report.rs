//! Validation reports: exhaustive law checks collect every violated
//! instance instead of failing fast, so a report doubles as a
//! counterexample listing.

use serde::{Deserialize, Serialize};

/// One violated law instance, with the indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Short law tag, e.g. `"associativity"` or `"left-identity"`.
    pub law: String,
    /// Indices identifying the failing instance (a composable triple,
    /// an object pair, an element, ...). Meaning depends on `law`.
    pub witness: Vec<usize>,
    /// Human-readable description of the failure.
    pub message: String,
}

/// Outcome of an exhaustive law check on a single subject.
///
/// Empty iff every law instance holds. Structural problems (malformed
/// tables, out-of-range indices) are reported as errors by the
/// validators, never as report entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// What was validated, e.g. `"category"` or `"graded-monoid"`.
    pub subject: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            violations: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        law: impl Into<String>,
        witness: Vec<usize>,
        message: impl Into<String>,
    ) {
        self.violations.push(Violation {
            law: law.into(),
            witness,
            message: message.into(),
        });
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Absorb another report, keeping this subject.
    pub fn absorb(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}
