//! Outcome records for the identity verifiers.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// One comparison inside a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckOutcome {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            equal: true,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            equal: false,
            detail: Some(detail.into()),
        }
    }

    pub fn compare<T: PartialEq + fmt::Debug>(name: impl Into<String>, left: &T, right: &T) -> Self {
        if left == right {
            CheckOutcome::pass(name)
        } else {
            CheckOutcome::fail(name, format!("{left:?} != {right:?}"))
        }
    }
}

/// A named batch of comparisons with its parameters and, where relevant, the
/// finite truncation the comparisons were made at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<String>,
    pub checks: Vec<CheckOutcome>,
    pub equal: bool,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, params: &[(&str, i64)]) -> Self {
        VerificationReport {
            identity: identity.into(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            truncation: None,
            checks: Vec::new(),
            equal: true,
        }
    }

    pub fn with_truncation(mut self, truncation: impl Into<String>) -> Self {
        self.truncation = Some(truncation.into());
        self
    }

    pub fn push(&mut self, outcome: CheckOutcome) {
        self.equal &= outcome.equal;
        self.checks.push(outcome);
    }

    pub fn passed(&self) -> bool {
        self.equal
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.equal)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(
            f,
            "{} [{}]: {}",
            self.identity,
            params.join(", "),
            if self.equal { "equal" } else { "MISMATCH" }
        )?;
        if let Some(t) = &self.truncation {
            writeln!(f, "  truncation: {t}")?;
        }
        for check in &self.checks {
            write!(f, "  {:<48} {}", check.name, if check.equal { "ok" } else { "FAIL" })?;
            if let Some(d) = &check.detail {
                write!(f, "  ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
