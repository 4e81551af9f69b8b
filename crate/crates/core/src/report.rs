//! Deterministic JSON reports shared by the command line and the suites.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::zs::CheckReport;

pub const SCHEMA: &str = "ore-report/1";

/// One checked expectation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub instance: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Record {
    pub fn new(
        name: impl Into<String>,
        instance: impl Into<String>,
        expected: impl ToString,
        got: impl ToString,
    ) -> Record {
        let expected = expected.to_string();
        let got = got.to_string();
        Record {
            name: name.into(),
            instance: instance.into(),
            pass: expected == got,
            expected,
            got,
        }
    }

    /// A record whose pass/fail is decided by the caller.
    pub fn judged(
        name: impl Into<String>,
        instance: impl Into<String>,
        expected: impl ToString,
        got: impl ToString,
        pass: bool,
    ) -> Record {
        Record {
            name: name.into(),
            instance: instance.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            pass,
        }
    }

    /// One summary record per axiom plus one per failure.
    pub fn from_check(prefix: &str, rep: &CheckReport) -> Vec<Record> {
        let mut out: Vec<Record> = rep
            .checked
            .iter()
            .map(|(ax, n)| {
                let failed = rep.failed.get(ax).copied().unwrap_or(0);
                Record::new(
                    format!("{prefix}/{ax}"),
                    format!("{n} instances"),
                    "0 failures",
                    format!("{failed} failures"),
                )
            })
            .collect();
        for f in &rep.failures {
            out.push(Record::judged(
                format!("{prefix}/{}", f.axiom),
                f.instance.clone(),
                f.rhs.clone(),
                f.lhs.clone(),
                false,
            ));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: Vec<String>,
    pub seed: u64,
    pub records: Vec<Record>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

impl Report {
    pub fn new(command: Vec<String>, seed: u64, mut records: Vec<Record>, result: Option<Value>) -> Report {
        records.sort();
        let passed = records.iter().filter(|r| r.pass).count();
        Report {
            schema: SCHEMA.to_string(),
            command,
            seed,
            summary: Summary {
                total: records.len(),
                passed,
                failed: records.len() - passed,
            },
            records,
            result,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
