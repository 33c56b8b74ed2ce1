use serde::Serialize;
use std::fmt;

/// One named check with a counterexample when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn new(name: &str, passed: bool, witness: impl FnOnce() -> String) -> Self {
        AxiomCheck { name: name.to_string(), passed, witness: if passed { None } else { Some(witness()) } }
    }

    pub fn with_witness(name: &str, witness: Option<String>) -> Self {
        AxiomCheck { name: name.to_string(), passed: witness.is_none(), witness }
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<AxiomCheck>,
}

impl Report {
    pub fn push(&mut self, c: AxiomCheck) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// True if every check with this name passed and at least one exists.
    pub fn passed(&self, name: &str) -> bool {
        let mut any = false;
        for c in self.checks.iter().filter(|c| c.name == name) {
            any = true;
            if !c.passed {
                return false;
            }
        }
        any
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "PASS {}", c.name)?,
                Some(w) => writeln!(f, "FAIL {}: {}", c.name, w)?,
            }
        }
        Ok(())
    }
}
