//! Std companion to `tverberg-core`: the `otps` point-set format, JSON-lines
//! reports with self-contained certificates, a standalone certificate
//! verifier, and a rayon-backed counterexample search.

pub mod format;
pub mod parallel;
pub mod payload;
pub mod report;
pub mod verify;

pub use format::{emit_pointset, parse_pointset, parse_rational, ParseError};
pub use payload::{Evidence, Payload};
pub use report::ReportRecord;
