//! Pass/fail outcomes of the machine checks, with counterexample payloads.

use std::fmt;

/// Outcome of one check: how many cases ran, which failed, and any caveats
/// worth surfacing even on a pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    check: String,
    cases: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

/// One failing case and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

impl Report {
    pub fn new(check: impl Into<String>, cases: usize) -> Self {
        Report {
            check: check.into(),
            cases,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn add_failure(&mut self, case: impl Into<String>, detail: impl Into<String>) {
        self.failures.push(Failure {
            case: case.into(),
            detail: detail.into(),
        });
    }

    pub fn add_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check(&self) -> &str {
        &self.check
    }

    pub fn cases(&self) -> usize {
        self.cases
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: PASS ({} cases)", self.check, self.cases)?;
        } else {
            write!(
                f,
                "{}: FAIL ({} of {} cases)",
                self.check,
                self.failures.len(),
                self.cases
            )?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        for failure in &self.failures {
            write!(f, "\n  counterexample {}: {}", failure.case, failure.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_shows_counterexamples() {
        let mut report = Report::new("demo", 3);
        assert!(report.passed());
        assert_eq!(report.to_string(), "demo: PASS (3 cases)");

        report.add_note("caveat");
        report.add_failure("case 2", "unexpected value");
        assert!(!report.passed());
        assert_eq!(
            report.to_string(),
            "demo: FAIL (1 of 3 cases)\n  note: caveat\n  counterexample case 2: unexpected value"
        );
    }
}
