//! Structured results for verification runs: how many cases were checked,
//! which ones disagreed, and informational notes. Display output is
//! deterministic so reports can be diffed.

use crate::ExactInt;
use std::fmt;

/// One disagreement: where it happened and the value each route produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub location: String,
    /// (route or source name, value as decimal text)
    pub values: Vec<(String, String)>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.location)?;
        for (name, value) in &self.values {
            write!(f, " {name}={value}")?;
        }
        Ok(())
    }
}

/// Outcome of a verification suite. `passed()` iff no failures were
/// recorded; informational entries never fail a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Mismatch>,
    pub informational: Vec<Mismatch>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            cases: 0,
            failures: Vec::new(),
            informational: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one case comparing several routes; unequal values become a
    /// failure. The location is only formatted when something disagrees.
    pub fn check(&mut self, location: impl FnOnce() -> String, values: &[(&str, &ExactInt)]) {
        self.cases += 1;
        let all_equal = values.windows(2).all(|w| w[0].1 == w[1].1);
        if !all_equal {
            self.failures.push(Mismatch {
                location: location(),
                values: values
                    .iter()
                    .map(|(name, value)| (name.to_string(), value.to_string()))
                    .collect(),
            });
        }
    }

    /// Records one boolean case with a preformatted detail on failure.
    pub fn check_that(&mut self, ok: bool, location: impl FnOnce() -> Mismatch) {
        self.cases += 1;
        if !ok {
            self.failures.push(location());
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "FAIL"
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} cases, {} failures: {}",
            self.suite,
            self.cases,
            self.failures.len(),
            self.status()
        )?;
        for note in &self.notes {
            writeln!(f, "  note {note}")?;
        }
        for info in &self.informational {
            writeln!(f, "  info {info}")?;
        }
        for failure in &self.failures {
            writeln!(f, "  fail {failure}")?;
        }
        Ok(())
    }
}
