//! Named pass/fail records shared by every verifier.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: &str) -> Self {
        Check { name: name.to_string(), status: Status::Pass, witness: None, note: None }
    }

    pub fn fail(name: &str, witness: impl Into<String>) -> Self {
        Check { name: name.to_string(), status: Status::Fail, witness: Some(witness.into()), note: None }
    }

    pub fn not_applicable(name: &str, reason: impl Into<String>) -> Self {
        Check { name: name.to_string(), status: Status::NotApplicable, witness: None, note: Some(reason.into()) }
    }

    /// Pass when `witness` is `None`, otherwise fail with its rendering.
    pub fn from_witness<W: std::fmt::Debug>(name: &str, witness: Option<W>) -> Self {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, format!("{w:?}")),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| !c.failed())
}

pub fn find<'a>(checks: &'a [Check], name: &str) -> Option<&'a Check> {
    checks.iter().find(|c| c.name == name)
}
