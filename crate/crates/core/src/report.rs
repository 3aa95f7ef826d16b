//! Pass/fail reports for axiom checks.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    /// Not evaluated because a prerequisite failed.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl AxiomResult {
    pub fn from_witnesses(axiom: impl Into<String>, witnesses: Vec<String>) -> Self {
        let status = if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        AxiomResult {
            axiom: axiom.into(),
            status,
            witnesses,
            note: None,
        }
    }

    pub fn vacuous(axiom: impl Into<String>, note: impl Into<String>) -> Self {
        AxiomResult {
            axiom: axiom.into(),
            status: Status::Vacuous,
            witnesses: Vec::new(),
            note: Some(note.into()),
        }
    }

    pub fn skipped(axiom: impl Into<String>, note: impl Into<String>) -> Self {
        AxiomResult {
            axiom: axiom.into(),
            status: Status::Skipped,
            witnesses: Vec::new(),
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub results: Vec<AxiomResult>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, result: AxiomResult) {
        self.results.push(result);
    }

    pub fn merge(&mut self, other: Report) {
        self.results.extend(other.results);
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    pub fn violation_count(&self) -> usize {
        self.failures().map(|r| r.witnesses.len().max(1)).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Vacuous => "vacuous",
                Status::Skipped => "skipped",
            };
            write!(f, "{:<10} {}", r.axiom, status)?;
            if let Some(note) = &r.note {
                write!(f, " ({note})")?;
            }
            writeln!(f)?;
            for w in r.witnesses.iter().take(10) {
                writeln!(f, "    {w}")?;
            }
            if r.witnesses.len() > 10 {
                writeln!(f, "    ... {} more", r.witnesses.len() - 10)?;
            }
        }
        Ok(())
    }
}
