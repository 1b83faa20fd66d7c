//! Standalone certificate replay. Uses nothing from a run except the
//! payload itself and the exact predicates of `tverberg-core`.

use thiserror::Error;
use tverberg_core::{Counterexample, Point, ReplayError};

use crate::payload::{rats, Payload};
use crate::report::ReportRecord;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("line {line}: not a report record: {message}")]
    Malformed { line: usize, message: String },
    #[error("block {block}, point {index}: expected {dim} coordinates")]
    Dimension { block: usize, index: usize, dim: usize },
    #[error("unrepresentable evidence: {0}")]
    Evidence(String),
    #[error(transparent)]
    Replay(#[from] ReplayError),
}

/// Replays one payload. `Ok(feasible)` reports which way the evidence
/// decided the instance.
pub fn verify_payload(payload: &Payload) -> Result<bool, VerifyError> {
    match payload {
        Payload::HullIntersection {
            dim,
            blocks,
            evidence,
        } => {
            let mut points = Vec::with_capacity(blocks.len());
            for (block, b) in blocks.iter().enumerate() {
                let mut pts = Vec::with_capacity(b.len());
                for (index, p) in b.iter().enumerate() {
                    if p.len() != *dim {
                        return Err(VerifyError::Dimension {
                            block,
                            index,
                            dim: *dim,
                        });
                    }
                    pts.push(Point::new(rats(p)));
                }
                points.push(pts);
            }
            let outcome = evidence.to_outcome().map_err(VerifyError::Evidence)?;
            outcome.verify(&points)?;
            Ok(outcome.is_feasible())
        }
        Payload::Counterexample {
            dim,
            r,
            alphas,
            evidence,
        } => {
            let c = Counterexample {
                dim: *dim,
                r: *r,
                alphas: rats(alphas),
                rank: 0,
                outcome: evidence.to_outcome().map_err(VerifyError::Evidence)?,
            };
            c.replay()?;
            Ok(false)
        }
    }
}

/// Outcome of replaying one JSON line.
#[derive(Debug)]
pub struct LineCheck {
    pub line: usize,
    pub command: String,
    /// `None` when the record carries no certificate.
    pub result: Option<Result<bool, VerifyError>>,
}

/// Replays every certificate in a JSON-lines report. Blank lines are
/// skipped; a line that is not a record is an error for the whole file.
pub fn verify_report(text: &str) -> Result<Vec<LineCheck>, VerifyError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let record: ReportRecord = serde_json::from_str(raw).map_err(|e| VerifyError::Malformed {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(LineCheck {
            line: i + 1,
            command: record.command.clone(),
            result: record.certificate.as_ref().map(verify_payload),
        });
    }
    Ok(out)
}
