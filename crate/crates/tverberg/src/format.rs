//! The `otps` text format.
//!
//! ```text
//! otps <d> <n>
//! # comments and blank lines are ignored
//! 1/2 -3/4
//! ...
//! ```
//!
//! Rationals are `p/q` or a bare integer. Emitted text is canonical: lowest
//! terms, sign on the numerator, single spaces, no comments, trailing newline.

use std::fmt::Write;

use thiserror::Error;
use tverberg_core::{Point, PointSet, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 means end of input.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Parses `p/q`, `-p/q` or an integer. Rejects zero denominators and
/// anything else (`+`, spaces, decimals).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    if !digits(num.strip_prefix('-').unwrap_or(num)) || !digits(den) {
        return None;
    }
    s.parse().ok()
}

pub fn parse_pointset(text: &str) -> Result<PointSet, ParseError> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = rows.next().ok_or_else(|| err(0, "missing `otps <d> <n>` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (d, n) = match fields.as_slice() {
        ["otps", d, n] => (
            d.parse::<usize>().map_err(|_| err(hline, format!("bad dimension `{d}`")))?,
            n.parse::<usize>().map_err(|_| err(hline, format!("bad point count `{n}`")))?,
        ),
        _ => return Err(err(hline, "expected header `otps <d> <n>`")),
    };
    if d == 0 {
        return Err(err(hline, "dimension must be positive"));
    }

    let mut points = Vec::with_capacity(n);
    for (line, row) in rows {
        if points.len() == n {
            return Err(err(line, format!("more than {n} rows")));
        }
        let coords = row
            .split_whitespace()
            .map(|tok| parse_rational(tok).ok_or_else(|| err(line, format!("malformed rational `{tok}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() != d {
            return Err(err(line, format!("expected {d} coordinates, found {}", coords.len())));
        }
        points.push(Point::new(coords));
    }
    if points.len() != n {
        return Err(err(0, format!("header promises {n} rows, found {}", points.len())));
    }
    PointSet::new(d, points).map_err(|e| err(0, e.to_string()))
}

pub fn emit_pointset(x: &PointSet) -> String {
    let mut out = format!("otps {} {}\n", x.dim(), x.len());
    for p in x.points() {
        let row: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
