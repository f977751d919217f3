use serde::Serialize;

/// Axioms checked by [`crate::quandle::validate_quandle`] and
/// [`crate::group::validate_group`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `a^a = a`
    Idempotence,
    /// every column map `a ↦ a^b` is a bijection
    LeftInvertibility,
    /// `(a^b)^c = (a^c)^(b^c)`
    SelfDistributivity,
    Associativity,
    Identity,
    Inverse,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub(crate) fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport { valid: violations.is_empty(), violations }
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    pub(crate) fn summary(&self) -> String {
        self.violations.iter().map(|v| format!("{:?} at {:?}", v.axiom, v.witness)).collect::<Vec<_>>().join("; ")
    }
}

/// Named pass/fail checks, used by the self-check and probe reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub(crate) fn new(name: &'static str, passed: bool) -> Self {
        Check { name, passed, detail: None }
    }

    pub(crate) fn with_detail(name: &'static str, failure: Option<String>) -> Self {
        Check { name, passed: failure.is_none(), detail: failure }
    }
}
