//! JSON check reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::comp::CompAlgebra;
use crate::config::Config;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    pub algebra: Option<CompAlgebra>,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    /// Inputs and seed reproducing a failure.
    pub witness: Option<Value>,
    /// Why a check was skipped.
    pub reason: Option<String>,
    pub millis: u64,
}

impl CheckRecord {
    /// A record whose status is `expected == actual`.
    pub fn compare(suite: &str, name: &str, algebra: Option<CompAlgebra>, expected: Value, actual: Value) -> Self {
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        CheckRecord {
            suite: suite.into(),
            name: name.into(),
            algebra,
            status,
            expected,
            actual,
            witness: None,
            reason: None,
            millis: 0,
        }
    }

    pub fn skip(suite: &str, name: &str, algebra: Option<CompAlgebra>, expected: Value, reason: String) -> Self {
        CheckRecord {
            suite: suite.into(),
            name: name.into(),
            algebra,
            status: Status::Skip,
            expected,
            actual: Value::Null,
            witness: None,
            reason: Some(reason),
            millis: 0,
        }
    }

    pub fn with_witness(mut self, witness: Option<Value>) -> Self {
        self.witness = witness;
        self
    }

    pub fn with_millis(mut self, millis: u64) -> Self {
        self.millis = millis;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub suite: String,
    pub config: Config,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl CheckReport {
    pub fn new(suite: &str, config: &Config, records: Vec<CheckRecord>) -> Self {
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
            }
        }
        CheckReport {
            schema_version: SCHEMA_VERSION,
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            suite: suite.into(),
            config: config.clone(),
            records,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// `0` when nothing failed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text table over the same records.
    pub fn table(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let status = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            let alg = r
                .algebra
                .map(|a| a.jordan_name().to_string())
                .unwrap_or_else(|| "-".into());
            let _ = write!(
                out,
                "{status:4}  {:<14} {:<28} {alg:<3} expected={} actual={}",
                r.suite, r.name, r.expected, r.actual
            );
            if let Some(reason) = &r.reason {
                let _ = write!(out, " ({reason})");
            }
            let _ = writeln!(out, "  [{} ms]", r.millis);
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} passed, {} failed, {} skipped", s.pass, s.fail, s.skip);
        out
    }
}
