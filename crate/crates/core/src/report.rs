//! Structured pass/fail records for cross-checks.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Recorded finding; never counts toward pass/fail.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Info => "info",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub params: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

impl Check {
    /// Pass iff `expected == actual` as values; both are stored rendered.
    pub fn compare<T: PartialEq + fmt::Display>(
        suite: &str,
        name: &str,
        params: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> Self {
        Check {
            suite: suite.into(),
            name: name.into(),
            params: params.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            status: if expected == actual {
                Status::Pass
            } else {
                Status::Fail
            },
        }
    }

    pub fn assert_true(
        suite: &str,
        name: &str,
        params: impl Into<String>,
        ok: bool,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            suite: suite.into(),
            name: name.into(),
            params: params.into(),
            expected: "true".into(),
            actual: detail.into(),
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    pub fn info(
        suite: &str,
        name: &str,
        params: impl Into<String>,
        finding: impl Into<String>,
    ) -> Self {
        Check {
            suite: suite.into(),
            name: name.into(),
            params: params.into(),
            expected: String::new(),
            actual: finding.into(),
            status: Status::Info,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Info => write!(
                f,
                "[{}] {}/{} {}: {}",
                self.status, self.suite, self.name, self.params, self.actual
            ),
            _ => write!(
                f,
                "[{}] {}/{} {}: expected={} actual={}",
                self.status, self.suite, self.name, self.params, self.expected, self.actual
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub informational: usize,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Info => s.informational += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        let s = self.summary();
        out.push_str(&format!(
            "summary: {} passed, {} failed, {} informational\n",
            s.passed, s.failed, s.informational
        ));
        out
    }
}

impl FromIterator<Check> for VerificationReport {
    fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> Self {
        VerificationReport {
            checks: iter.into_iter().collect(),
        }
    }
}
