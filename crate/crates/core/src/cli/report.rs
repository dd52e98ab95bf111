use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
}

/// Whether the exact certificate attached to the payload was re-checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExactCheck {
    Pass,
    Fail,
    /// The result carries no certificate (for example a bijective verdict or
    /// an empty window search).
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub format: u64,
    pub name: String,
    pub command: String,
    pub group: Value,
    pub seed: u64,
    pub status: Status,
    pub exact_check: ExactCheck,
    /// One line per `expect` field that did not match.
    #[serde(default)]
    pub expect_mismatches: Vec<String>,
    pub payload: Value,
    pub version: String,
    /// sha256 of the experiment JSON as written.
    pub input_digest: String,
    /// Present only when timing was requested, so default reports stay
    /// byte-identical across runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_us: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<Report> {
        Ok(serde_json::from_str(s)?)
    }

    /// Human-readable summary. Scalars stay exact `p/q` strings.
    pub fn to_text(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let check = match self.exact_check {
            ExactCheck::Pass => "pass",
            ExactCheck::Fail => "fail",
            ExactCheck::NotApplicable => "n/a",
        };
        let mut out = format!("[{tag}] {} ({}) exact-check: {check}\n", self.name, self.command);
        if let Value::Object(m) = &self.payload {
            for (k, v) in m {
                let shown = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "  {k}: {shown}");
            }
        }
        for miss in &self.expect_mismatches {
            let _ = writeln!(out, "  expectation failed: {miss}");
        }
        if let Some(us) = self.duration_us {
            let _ = writeln!(out, "  duration: {us} us");
        }
        out
    }
}

pub fn input_digest(source: &Value) -> String {
    let text = serde_json::to_string(source).expect("value serializes");
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Compares `expect` against top-level payload fields. A boolean expectation
/// against a non-boolean field tests presence (non-null).
pub fn check_expectations(expect: &serde_json::Map<String, Value>, payload: &Value) -> Vec<String> {
    let mut misses = Vec::new();
    for (k, want) in expect {
        let got = payload.get(k).unwrap_or(&Value::Null);
        let ok = match (want, got) {
            (Value::Bool(b), Value::Bool(g)) => b == g,
            (Value::Bool(b), other) => *b == !other.is_null(),
            (w, g) => w == g,
        };
        if !ok {
            misses.push(format!("{k}: expected {want}, found {got}"));
        }
    }
    misses
}
