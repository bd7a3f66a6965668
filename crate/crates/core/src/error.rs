//! Engine errors. Law violations are *not* errors — they go into
//! [`ValidationReport`](crate::report::ValidationReport)s. Errors cover
//! malformed inputs, frame mismatches, exceeded guards, and broken
//! internal invariants.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed tables: wrong lengths, out-of-range indices, a compose
    /// entry defined on a non-composable pair. Distinct from law
    /// violations, which are collected in a report instead.
    #[error("structural error in {subject}: {detail}")]
    Structure { subject: String, detail: String },

    /// A constructed object exceeded a size guard.
    #[error("size guard exceeded while building {what}: {size} > {limit}")]
    SizeGuard {
        what: String,
        size: usize,
        limit: usize,
    },

    /// A brute-force enumeration would exceed its candidate budget.
    #[error("enumeration guard exceeded for {what}: {candidates} candidates > {limit}")]
    EnumerationGuard {
        what: String,
        candidates: u128,
        limit: u128,
    },

    /// Two values that must live over the same category or functor do not.
    #[error("frame mismatch: {0}")]
    FrameMismatch(String),

    /// A functor required to be strong monoidal has a non-invertible
    /// unit or multiplication component.
    #[error("{subject} is not strong monoidal: {detail}")]
    NotStrong { subject: String, detail: String },

    /// A numbered hypothesis of the extension construction failed.
    #[error("hypothesis ({number}) violated: {detail}")]
    Assumption { number: u8, detail: String },

    /// Factoring a cocone through a colimit produced inconsistent values
    /// on different representatives of the same class.
    #[error("factorization is not well defined: {0}")]
    WellDefined(String),

    /// An operation's precondition failed (invalid input data).
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A post-construction self-check failed. These conditions are
    /// guaranteed by construction, so a failure is an engine bug.
    #[error("engine invariant broken (this is a bug): {0}")]
    Internal(String),
}

impl Error {
    pub fn structure(subject: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Structure {
            subject: subject.into(),
            detail: detail.into(),
        }
    }

    /// True for guard aborts (size or enumeration), which callers may
    /// want to distinguish from semantic failures.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::SizeGuard { .. } | Error::EnumerationGuard { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
