use std::fmt;
use std::time::Duration;

use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    /// A known, analysed difference from a published claim. Never counted as
    /// a failure.
    DiscrepancyLogged,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DiscrepancyLogged => "discrepancy-logged",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One verified statement over a range of parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub range: String,
    pub status: Status,
    /// Expected values, `;`-separated per parameter value, decimal integers.
    pub expected: String,
    pub actual: String,
    /// Mismatching parameters, errors, or the note attached to a logged
    /// discrepancy.
    pub detail: String,
    /// Labels of the parameter values whose expected and actual differ.
    pub mismatches: Vec<String>,
}

/// Collects expected/actual pairs per parameter value and folds them into a
/// [`Check`].
#[derive(Debug)]
pub struct Tally {
    name: String,
    labels: Vec<String>,
    expected: Vec<String>,
    actual: Vec<String>,
    mismatches: Vec<String>,
    errors: Vec<String>,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            labels: Vec::new(),
            expected: Vec::new(),
            actual: Vec::new(),
            mismatches: Vec::new(),
            errors: Vec::new(),
        }
    }

    pub fn record(&mut self, label: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (label, expected, actual) = (label.into(), expected.to_string(), actual.to_string());
        if expected != actual {
            self.mismatches.push(label.clone());
        }
        self.labels.push(label);
        self.expected.push(expected);
        self.actual.push(actual);
    }

    /// Records a predicate that should hold.
    pub fn holds(&mut self, label: impl Into<String>, ok: bool) {
        self.record(label, true, ok);
    }

    pub fn error(&mut self, label: impl Into<String>, err: impl fmt::Display) {
        self.errors.push(format!("{}: {err}", label.into()));
    }

    /// Records `f()` or, when it errors, the error.
    pub fn try_record<E: ToString, A: ToString>(
        &mut self,
        label: impl Into<String>,
        f: impl FnOnce() -> crate::Result<(E, A)>,
    ) {
        let label = label.into();
        match f() {
            Ok((e, a)) => self.record(label, e, a),
            Err(err) => self.error(label, err),
        }
    }

    pub fn mismatches(&self) -> &[String] {
        &self.mismatches
    }

    pub fn finish(self, range: impl Into<String>) -> Check {
        let status = if self.mismatches.is_empty() && self.errors.is_empty() && !self.labels.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut detail = Vec::new();
        if self.labels.is_empty() && self.errors.is_empty() {
            detail.push("empty range".to_string());
        }
        if !self.mismatches.is_empty() {
            detail.push(format!("mismatch at {}", self.mismatches.join(", ")));
        }
        let mismatches = self.mismatches;
        detail.extend(self.errors);
        Check {
            name: self.name,
            range: range.into(),
            status,
            expected: self.expected.join("; "),
            actual: self.actual.join("; "),
            detail: detail.join("; "),
            mismatches,
        }
    }

    /// Like [`Tally::finish`], but the expected column holds a published
    /// claim known to differ. The check is logged as a discrepancy when every
    /// actual value equals `corrected`, and fails otherwise.
    pub fn finish_discrepancy(self, range: impl Into<String>, corrected: &[String], note: &str) -> Check {
        let explained = self.errors.is_empty() && !self.actual.is_empty() && self.actual == corrected;
        let mut check = self.finish(range);
        if explained {
            check.status = Status::DiscrepancyLogged;
            check.detail = note.to_string();
        } else {
            check.status = Status::Fail;
            check.detail = format!("{}; unexplained: {}", note, check.detail);
        }
        check
    }
}

/// Output of one verification suite.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub wall_time: Duration,
}

impl RunReport {
    pub fn new(suite: impl Into<String>, mut checks: Vec<Check>, wall_time: Duration) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.range.cmp(&b.range)));
        RunReport {
            suite: suite.into(),
            checks,
            wall_time,
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// 1 if any check failed, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.count(Status::Fail) > 0)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::DiscrepancyLogged)
    }

    pub fn merge(suite: impl Into<String>, reports: Vec<RunReport>) -> Self {
        let wall_time = reports.iter().map(|r| r.wall_time).sum();
        let checks = reports.into_iter().flat_map(|r| r.checks).collect();
        Self::new(suite, checks, wall_time)
    }

    fn summary(&self) -> String {
        format!(
            "{} pass, {} fail, {} discrepancy-logged",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::DiscrepancyLogged)
        )
    }

    /// JSON document. Wall time is included only when `timing` is set, so
    /// that the default output is byte-for-byte reproducible.
    pub fn to_json(&self, timing: bool) -> String {
        let checks: Vec<_> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "range": c.range,
                    "status": c.status.name(),
                    "expected": c.expected,
                    "actual": c.actual,
                    "detail": c.detail,
                })
            })
            .collect();
        let mut doc = json!({
            "suite": self.suite,
            "checks": checks,
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "discrepancy_logged": self.count(Status::DiscrepancyLogged),
            },
        });
        if timing {
            doc["wall_time_ms"] = json!(self.wall_time.as_millis() as u64);
        }
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["suite", "name", "range", "status", "expected", "actual", "detail"])
            .expect("in-memory write");
        for c in &self.checks {
            w.write_record([
                self.suite.as_str(),
                &c.name,
                &c.range,
                c.status.name(),
                &c.expected,
                &c.actual,
                &c.detail,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    /// One line per check; failures and discrepancies carry their details.
    pub fn to_plain(&self, timing: bool) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = format!("suite {}\n", self.suite);
        for c in &self.checks {
            out += &format!("{:<18} {:<width$}  {}\n", c.status.name(), c.name, c.range);
            match c.status {
                Status::Pass => {}
                Status::Fail => {
                    out += &format!("    {}\n", c.detail);
                    out += &format!("    expected: {}\n    actual:   {}\n", clip(&c.expected), clip(&c.actual));
                }
                Status::DiscrepancyLogged => out += &format!("    {}\n", c.detail),
            }
        }
        out += &self.summary();
        if timing {
            out += &format!(" in {:.2?}", self.wall_time);
        }
        out + "\n"
    }
}

fn clip(s: &str) -> String {
    const MAX: usize = 300;
    if s.chars().count() <= MAX {
        s.to_string()
    } else {
        s.chars().take(MAX).collect::<String>() + " ..."
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_statuses() {
        let mut t = Tally::new("a");
        t.record("n=1", 1, 1);
        assert_eq!(t.finish("n=1").status, Status::Pass);
        let mut t = Tally::new("b");
        t.record("n=1", 1, 2);
        let c = t.finish("n=1");
        assert_eq!(c.status, Status::Fail);
        assert!(c.detail.contains("n=1"));
        assert_eq!(Tally::new("empty").finish("").status, Status::Fail);
        let mut t = Tally::new("c");
        t.record("n=2", 2, -2);
        assert_eq!(t.finish_discrepancy("n=2", &["-2".into()], "sign").status, Status::DiscrepancyLogged);
        let mut t = Tally::new("d");
        t.record("n=2", 2, 3);
        assert_eq!(t.finish_discrepancy("n=2", &["-2".into()], "sign").status, Status::Fail);
    }

    #[test]
    fn report_order_and_exit() {
        let mut ok = Tally::new("z");
        ok.holds("x", true);
        let mut bad = Tally::new("a");
        bad.holds("x", false);
        let r = RunReport::new("s", vec![ok.finish("r"), bad.finish("r")], Duration::ZERO);
        assert_eq!(r.checks[0].name, "a");
        assert_eq!(r.exit_code(), 1);
        assert!(r.to_csv().lines().count() == 3);
        assert!(!r.to_json(false).contains("wall_time"));
    }
}
