//! Claim execution records and report emission.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Holds,
    Fails,
    Skipped { reason: String },
}

impl std::fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClaimStatus::Holds => write!(f, "holds"),
            ClaimStatus::Fails => write!(f, "fails"),
            ClaimStatus::Skipped { reason } => write!(f, "skipped({reason})"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub params: serde_json::Value,
    pub expected: String,
    pub computed: String,
    pub status: ClaimStatus,
    /// Machine-checkable witness accompanying a failure.
    pub witness: Option<serde_json::Value>,
    pub millis: u128,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Fixed-column CSV: claim_id,status,expected,computed,millis.
pub fn emit_csv(records: &[ClaimRecord]) -> String {
    let mut out = String::from("claim_id,status,expected,computed,millis\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            csv_field(&r.id),
            csv_field(&r.status.to_string()),
            csv_field(&r.expected),
            csv_field(&r.computed),
            r.millis
        ));
    }
    out
}

pub fn emit_json(records: &[ClaimRecord]) -> Result<String> {
    Ok(serde_json::to_string_pretty(records)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

pub fn write_report(records: &[ClaimRecord], path: &Path, format: ReportFormat) -> Result<()> {
    let body = match format {
        ReportFormat::Csv => emit_csv(records),
        ReportFormat::Json => emit_json(records)?,
    };
    std::fs::write(path, body).map_err(|e| Error::io(path.display().to_string(), e))
}
