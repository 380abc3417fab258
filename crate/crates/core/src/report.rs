//! Pass/fail reports shared by every verification routine.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(default)]
    pub witness: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, witness: Value) -> Check {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub pass: usize,
    pub fail: usize,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        if check.passed() {
            self.pass += 1;
        } else {
            self.fail += 1;
        }
        self.checks.push(check);
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, witness: Value) {
        self.push(Check::new(name, ok, witness));
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.extend(other.checks);
    }

    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn all_passed(&self) -> bool {
        self.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}\n", c.name));
        }
        out.push_str(&format!("{} passed, {} failed\n", self.pass, self.fail));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_json() {
        let mut r = Report::new();
        r.record("a", true, Value::Null);
        r.record("b", false, serde_json::json!({"entry": 3}));
        assert_eq!((r.pass, r.fail, r.total()), (1, 1, 2));
        assert_eq!(r.exit_code(), 1);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"status\":\"fail\""));
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
