use serde::Serialize;

/// One named check with its verdict and a human-readable diagnostic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub id: String,
    pub pass: bool,
    pub message: String,
}

/// An ordered collection of clauses; passes iff every clause passes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, id: impl Into<String>, pass: bool, message: impl Into<String>) {
        self.clauses.push(Clause {
            id: id.into(),
            pass,
            message: message.into(),
        });
    }

    /// Records a clause from a list of violations (empty list = pass).
    pub fn push_violations(&mut self, id: impl Into<String>, ok_message: &str, violations: Vec<String>) {
        if violations.is_empty() {
            self.push(id, true, ok_message);
        } else {
            self.push(id, false, violations.join("; "));
        }
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for c in other.clauses {
            self.clauses.push(Clause {
                id: format!("{prefix}{}", c.id),
                ..c
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    /// Verdict of the named clause (`false` if absent).
    pub fn clause_passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.pass)
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.failures().next()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pass": self.passed(),
            "clauses": self.clauses,
        })
    }
}
