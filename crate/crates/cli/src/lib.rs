//! Output records and argument helpers shared by the `arithper` binary and its tests.

pub mod output;

use std::ops::RangeInclusive;

/// Parses an inclusive range `lo..hi` (or a single integer).
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("invalid range `{s}` (expected lo..hi)");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.trim(), hi.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let lo: i64 = lo.parse().map_err(|_| bad())?;
    let hi: i64 = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// Parses `key=value`.
pub fn parse_key_value(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
        _ => Err(format!("expected key=value, got `{s}`")),
    }
}
