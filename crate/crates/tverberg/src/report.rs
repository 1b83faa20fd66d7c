use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::payload::Payload;

/// One line of a report. Field order is fixed, so identical runs give
/// identical lines apart from `timing_ms`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub command: String,
    pub inputs: Value,
    /// Tag of the statement being checked; absent for plain
    /// computations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim: Option<String>,
    /// `false` only when a claim check ran and failed.
    pub passed: bool,
    pub outcome: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Payload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub timing_ms: u64,
}

impl ReportRecord {
    pub fn new(command: &str, inputs: Value, outcome: Value) -> ReportRecord {
        ReportRecord {
            command: command.to_string(),
            inputs,
            claim: None,
            passed: true,
            outcome,
            certificate: None,
            seed: None,
            timing_ms: 0,
        }
    }

    pub fn claim(mut self, tag: &str, passed: bool) -> ReportRecord {
        self.claim = Some(tag.to_string());
        self.passed = passed;
        self
    }

    pub fn certificate(mut self, payload: Payload) -> ReportRecord {
        self.certificate = Some(payload);
        self
    }

    pub fn seed(mut self, seed: u64) -> ReportRecord {
        self.seed = Some(seed);
        self
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    /// One human-readable row: command, claim, status, outcome.
    pub fn to_table_row(&self) -> String {
        let status = if self.passed { "ok" } else { "FAILED" };
        format!(
            "{:<14} {:<14} {:<6} {}",
            self.command,
            self.claim.as_deref().unwrap_or("-"),
            status,
            self.outcome
        )
    }
}
