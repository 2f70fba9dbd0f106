//! Pass/fail rows shared by every verification routine.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Must hold; a failure fails the suite.
    Check,
    /// A displayed claim tested as stated; reported with a witness, never fatal.
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: Kind,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), kind: Kind::Check, passed, detail: detail.into() }
    }

    pub fn finding(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), kind: Kind::Finding, passed, detail: detail.into() }
    }

    pub fn is_fatal(&self) -> bool {
        self.kind == Kind::Check && !self.passed
    }

    /// An error while computing the check counts as a failure.
    pub fn from_result(name: impl Into<String>, r: crate::Result<(bool, String)>) -> Self {
        match r {
            Ok((p, d)) => Check::check(name, p, d),
            Err(e) => Check::check(name, false, format!("error: {e}")),
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    !checks.iter().any(Check::is_fatal)
}
