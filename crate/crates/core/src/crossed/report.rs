use serde_json::{json, Value};

use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail { witness: String, failures: usize },
}

/// Outcome of one check over `count` inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub check: String,
    pub dim: usize,
    pub count: usize,
    pub status: Status,
}

impl CheckLine {
    /// Summarise labelled outcomes; the witness is the first failure in input
    /// order. An `Err` counts as a failure and its message joins the witness.
    pub fn from_outcomes(
        check: impl Into<String>,
        dim: usize,
        outcomes: Vec<(String, Result<bool>)>,
    ) -> CheckLine {
        let count = outcomes.len();
        let mut witness = None;
        let mut failures = 0;
        for (label, r) in outcomes {
            let bad = match r {
                Ok(true) => None,
                Ok(false) => Some(label),
                Err(e) => Some(format!("{label}: {e}")),
            };
            if let Some(w) = bad {
                failures += 1;
                witness.get_or_insert(w);
            }
        }
        let status = match witness {
            None => Status::Pass,
            Some(witness) => Status::Fail { witness, failures },
        };
        CheckLine {
            check: check.into(),
            dim,
            count,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        let status = match &self.status {
            Status::Pass => json!("pass"),
            Status::Fail { witness, failures } => json!({"witness": witness, "failures": failures}),
        };
        json!({"check": self.check, "dim": self.dim, "count": self.count, "status": status})
    }
}

/// A set of check lines, kept sorted by `(check, dim)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<CheckLine>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, line: CheckLine) {
        let key = (line.check.clone(), line.dim);
        let at = self
            .lines
            .partition_point(|l| (l.check.as_str(), l.dim) <= (key.0.as_str(), key.1));
        self.lines.insert(at, line);
    }

    pub fn extend(&mut self, other: Report) {
        for l in other.lines {
            self.push(l);
        }
    }

    pub fn lines(&self) -> &[CheckLine] {
        &self.lines
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(CheckLine::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.passed())
    }

    pub fn find(&self, check: &str, dim: usize) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.check == check && l.dim == dim)
    }

    /// One JSON object per line, in canonical order.
    pub fn to_json_lines(&self) -> Vec<String> {
        self.lines.iter().map(|l| l.to_json().to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn first_failure_is_the_witness() {
        let l = CheckLine::from_outcomes(
            "ddzero",
            3,
            vec![
                ("a".into(), Ok(true)),
                ("b".into(), Ok(false)),
                ("c".into(), Err(Error::Overflow)),
            ],
        );
        assert_eq!(
            l.status,
            Status::Fail {
                witness: "b".into(),
                failures: 2
            }
        );
        assert_eq!(l.to_json()["status"]["witness"], "b");
    }

    #[test]
    fn lines_sorted_by_check_then_dim() {
        let mut r = Report::new();
        for (c, d) in [("relators", 2), ("ddzero", 4), ("cm1", 2), ("ddzero", 3)] {
            r.push(CheckLine::from_outcomes(c, d, vec![]));
        }
        let keys: Vec<(&str, usize)> = r.lines().iter().map(|l| (l.check.as_str(), l.dim)).collect();
        assert_eq!(keys, [("cm1", 2), ("ddzero", 3), ("ddzero", 4), ("relators", 2)]);
        assert_eq!(r.to_json_lines()[0], r#"{"check":"cm1","count":0,"dim":2,"status":"pass"}"#);
    }
}
