//! Plain-text persistence for computed polynomial tables.
//!
//! The format is line oriented so diffs and version control stay usable: a
//! header line, then one `E n d m coeff` record per nonzero coefficient,
//! sorted by `(n, d, m)`. Loading validates each polynomial as it is
//! assembled (coefficient mass, degree bounds) and reports the first
//! offending `n`, so a corrupted or hand-edited file cannot seed later
//! computations silently.

use std::fs;
use std::io;
use std::path::Path;

use num_traits::Zero;
use thiserror::Error;

use crate::eulerian::{EulerianError, EulerianTable, Provenance};
use crate::{Nat, Poly2};

/// First line of every cache file.
pub const CACHE_HEADER: &str = "# qeulerian-cache v1";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("line 1: expected header {CACHE_HEADER:?}, found {found:?}")]
    Header { found: String },
    #[error("line {line}: malformed record {text:?}")]
    Record { line: usize, text: String },
    #[error("line {line}: records out of order, {prev:?} then {next:?}")]
    Order { line: usize, prev: (usize, usize, usize), next: (usize, usize, usize) },
    #[error("cached polynomial for n = {n} is invalid: {source}")]
    Invalid { n: usize, source: EulerianError },
}

/// Writes every table entry to `path`, replacing the file.
pub fn save(table: &EulerianTable, path: &Path) -> Result<(), CacheError> {
    fs::write(path, render(table))?;
    Ok(())
}

/// Serializes the table without touching the filesystem.
pub fn render(table: &EulerianTable) -> String {
    let mut out = String::from(CACHE_HEADER);
    out.push('\n');
    for (n, entry) in table.iter() {
        for (d, m, c) in entry.poly.terms() {
            out.push_str(&format!("E {n} {d} {m} {c}\n"));
        }
    }
    out
}

/// Reads a cache file, validating every polynomial before it enters the
/// table.
pub fn load(path: &Path) -> Result<EulerianTable, CacheError> {
    parse(&fs::read_to_string(path)?)
}

/// Parses cache text into a validated table.
pub fn parse(text: &str) -> Result<EulerianTable, CacheError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first.trim_end() == CACHE_HEADER => {}
        other => {
            return Err(CacheError::Header {
                found: other.map(|(_, l)| l.to_string()).unwrap_or_default(),
            })
        }
    }
    let mut table = EulerianTable::new();
    let mut pending: Option<(usize, Poly2)> = None;
    let mut prev_key: Option<(usize, usize, usize)> = None;
    for (idx, raw) in lines {
        let line = idx + 1;
        let text = raw.trim_end();
        if text.is_empty() {
            continue;
        }
        let record = parse_record(text)
            .ok_or_else(|| CacheError::Record { line, text: text.to_string() })?;
        let (n, d, m, coeff) = record;
        if let Some(prev) = prev_key {
            let next = (n, d, m);
            if next <= prev {
                return Err(CacheError::Order { line, prev, next });
            }
        }
        prev_key = Some((n, d, m));
        match &mut pending {
            Some((cur, poly)) if *cur == n => poly.add_term(d, m, coeff),
            _ => {
                flush(&mut table, pending.take())?;
                let mut poly = Poly2::zero();
                poly.add_term(d, m, coeff);
                pending = Some((n, poly));
            }
        }
    }
    flush(&mut table, pending.take())?;
    Ok(table)
}

fn flush(table: &mut EulerianTable, pending: Option<(usize, Poly2)>) -> Result<(), CacheError> {
    if let Some((n, poly)) = pending {
        table
            .insert(n, poly, Provenance::CacheFile)
            .map_err(|source| CacheError::Invalid { n, source })?;
    }
    Ok(())
}

fn parse_record(text: &str) -> Option<(usize, usize, usize, Nat)> {
    let mut fields = text.split_whitespace();
    if fields.next()? != "E" {
        return None;
    }
    let n = fields.next()?.parse().ok()?;
    let d = fields.next()?.parse().ok()?;
    let m = fields.next()?.parse().ok()?;
    let coeff: Nat = fields.next()?.parse().ok()?;
    if fields.next().is_some() || coeff.is_zero() {
        return None;
    }
    Some((n, d, m, coeff))
}
