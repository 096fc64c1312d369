use serde::{Deserialize, Serialize};

/// Outcome of checking one identity over every case up to a degree cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub cap: usize,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

/// A case where the two sides of an identity differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    pub fn new(case: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Violation {
            case: case.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

impl Report {
    pub fn new(identity: impl Into<String>, cap: usize) -> Self {
        Report {
            identity: identity.into(),
            cap,
            checked: 0,
            violations: Vec::new(),
        }
    }

    /// Collects per-case outcomes, `None` meaning the case passed.
    pub fn from_outcomes(identity: impl Into<String>, cap: usize, outcomes: impl IntoIterator<Item = Option<Violation>>) -> Self {
        let mut report = Report::new(identity, cap);
        for outcome in outcomes {
            report.record(outcome);
        }
        report
    }

    pub fn record(&mut self, outcome: Option<Violation>) {
        self.checked += 1;
        if let Some(v) = outcome {
            self.violations.push(v);
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
