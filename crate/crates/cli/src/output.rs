//! Serialized forms of reports and sequence values.
//!
//! Exact values are always strings (`123`, `-7/2`). Timings are kept out of
//! the `results` array so that two runs of the same command produce
//! identical `results` whatever the thread count.

use std::collections::BTreeMap;
use std::io::{self, Write};

use arithper::sequences::SeqValue;
use arithper::verifier::{Report, Status};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "arithper/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub id: String,
    pub kind: String,
    pub params: BTreeMap<String, String>,
    pub status: String,
    pub computed: String,
    pub expected: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl From<&Report> for ReportRow {
    fn from(r: &Report) -> ReportRow {
        ReportRow {
            id: r.id.clone(),
            kind: r.kind.to_string(),
            params: r
                .params
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            status: r.status.to_string(),
            computed: r.computed.clone(),
            expected: r.expected.clone(),
            modulus: r.modulus.clone(),
            exact: r.exact.clone(),
            reason: r.reason.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqRow {
    pub name: String,
    pub index: i64,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_integer: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator_bound: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl SeqRow {
    pub fn value(v: &SeqValue) -> SeqRow {
        SeqRow {
            name: v.name.to_string(),
            index: v.index,
            status: Status::Pass.to_string(),
            value: Some(v.value.to_string()),
            is_integer: Some(v.is_integer),
            denominator_bound: v.denominator_bound.as_ref().map(ToString::to_string),
            reason: None,
        }
    }

    pub fn skipped(name: &str, index: i64, reason: String) -> SeqRow {
        SeqRow {
            name: name.to_string(),
            index,
            status: Status::Skip.to_string(),
            value: None,
            is_integer: None,
            denominator_bound: None,
            reason: Some(reason),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Summary {
    pub fn of<'a>(statuses: impl IntoIterator<Item = &'a str>) -> Summary {
        let mut s = Summary {
            total: 0,
            pass: 0,
            fail: 0,
            skip: 0,
        };
        for status in statuses {
            s.total += 1;
            match status {
                "PASS" => s.pass += 1,
                "FAIL" => s.fail += 1,
                _ => s.skip += 1,
            }
        }
        s
    }
}

/// The single JSON object written by `--json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Output<T> {
    pub schema: String,
    pub command: Vec<String>,
    pub results: Vec<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    /// Milliseconds per result, in the same order as `results`.
    pub timings_ms: Vec<u64>,
}

impl<T: Serialize> Output<T> {
    pub fn new(command: Vec<String>, results: Vec<T>, timings_ms: Vec<u64>) -> Output<T> {
        Output {
            schema: SCHEMA.to_string(),
            command,
            results,
            summary: None,
            timings_ms,
        }
    }

    pub fn write_json(&self, out: impl Write) -> io::Result<()> {
        let mut out = out;
        serde_json::to_writer_pretty(&mut out, self)?;
        writeln!(out)
    }
}

pub fn write_reports_csv(out: impl Write, rows: &[ReportRow], ms: &[u64]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "id", "kind", "params", "status", "computed", "expected", "modulus", "reason", "ms",
    ])?;
    for (r, ms) in rows.iter().zip(ms) {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        w.write_record([
            r.id.as_str(),
            &r.kind,
            &params.join(","),
            &r.status,
            &r.computed,
            &r.expected,
            r.modulus.as_deref().unwrap_or(""),
            r.reason.as_deref().unwrap_or(""),
            &ms.to_string(),
        ])?;
    }
    w.flush()
}

/// CSV columns `name,index,value,is_integer,ms`; skipped rows have value `SKIP`.
pub fn write_seq_csv(out: impl Write, rows: &[SeqRow], ms: &[u64]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["name", "index", "value", "is_integer", "ms"])?;
    for (r, ms) in rows.iter().zip(ms) {
        let value = r.value.clone().unwrap_or_else(|| r.status.clone());
        let is_integer = r.is_integer.map(|b| b.to_string()).unwrap_or_default();
        w.write_record([
            &r.name,
            &r.index.to_string(),
            &value,
            &is_integer,
            &ms.to_string(),
        ])?;
    }
    w.flush()
}

/// One human-readable line per report.
pub fn report_line(r: &ReportRow) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut line = format!("{} {} [{}]", r.status, r.id, params.join(","));
    if let Some(reason) = &r.reason {
        line.push_str(&format!(" {reason}"));
    }
    if !r.computed.is_empty() || !r.expected.is_empty() {
        match &r.modulus {
            Some(m) => line.push_str(&format!(
                " computed {} = {} (mod {m}), expected {}",
                r.exact.as_deref().unwrap_or("?"),
                r.computed,
                r.expected
            )),
            None => line.push_str(&format!(
                " computed {}, expected {}",
                r.computed, r.expected
            )),
        }
    }
    line
}
