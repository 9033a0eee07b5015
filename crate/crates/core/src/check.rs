//! Outcome records for finite-range verification of a claim.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// The claim held over the whole scanned range.
    Pass,
    /// The claim failed inside its stated range.
    Fail,
    /// The literal claim fails at recorded points, but the failure is a
    /// documented observation and does not gate a verification run.
    Flagged,
    /// The requested parameters lie outside the claim's stated range; only
    /// observations are recorded.
    OutOfRange,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Flagged => "flagged",
            Outcome::OutOfRange => "out-of-range",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of checking one claim over a parameter range.
///
/// A counterexample is recorded iff the outcome is [`Outcome::Fail`] or
/// [`Outcome::Flagged`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub claim: String,
    pub range: String,
    pub outcome: Outcome,
    pub counterexample: Option<String>,
    pub observations: Vec<String>,
}

impl CheckReport {
    pub fn new(claim: impl Into<String>, range: impl Into<String>) -> Self {
        CheckReport {
            claim: claim.into(),
            range: range.into(),
            outcome: Outcome::Pass,
            counterexample: None,
            observations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    /// Only a scoped failure fails a verification run.
    pub fn is_gating_failure(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    /// Records a violation; the first one becomes the counterexample.
    pub(crate) fn violation(&mut self, outcome: Outcome, detail: String) {
        debug_assert!(matches!(outcome, Outcome::Fail | Outcome::Flagged));
        if self.counterexample.is_none() {
            self.counterexample = Some(detail.clone());
        }
        if self.outcome != Outcome::Fail {
            self.outcome = outcome;
        }
        if outcome == Outcome::Flagged {
            self.observations.push(detail);
        }
    }

    pub(crate) fn fail(&mut self, detail: String) {
        self.violation(Outcome::Fail, detail);
    }

    pub(crate) fn observe(&mut self, note: String) {
        self.observations.push(note);
    }
}
