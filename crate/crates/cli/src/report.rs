//! Run reports: a key:value text document and its JSON twin, both saved
//! under `{out}/{timestamp}-{hash}/`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use kappa_core::claims::{ClaimRecord, Status};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const TOOL: &str = "kappa";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub status: Status,
    pub records: Vec<ClaimRecord>,
    /// Full structured result of the subcommand.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

impl Report {
    pub fn new(command: String, records: Vec<ClaimRecord>, data: Option<serde_json::Value>) -> Self {
        Report { tool: TOOL, version: VERSION, command, status: overall(&records), records, data }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 3,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "tool: {}", self.tool);
        let _ = writeln!(s, "version: {}", self.version);
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "status: {}", self.status.name());
        let _ = writeln!(s, "records: {}", self.records.len());
        for r in &self.records {
            let _ = writeln!(s);
            let _ = writeln!(s, "record: {}", r.id);
            let _ = writeln!(s, "anchor: {}", r.anchor);
            let _ = writeln!(s, "status: {}", r.status.name());
            let _ = writeln!(s, "detail: {}", r.detail);
            let _ = writeln!(s, "checks: {}", r.checks);
            let _ = writeln!(s, "nodes: {}", r.nodes);
            if let Some(ms) = r.wall_ms {
                let _ = writeln!(s, "wall_ms: {ms}");
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    /// Writes `report.txt` and `report.json` into a fresh directory named by
    /// UTC time and the leading hex of the JSON's SHA-256.
    pub fn save(&self, out: &Path) -> Result<PathBuf> {
        let json = self.to_json();
        let hash = hex::encode(Sha256::digest(json.as_bytes()));
        let stamp = chrono::Utc::now().format("%Y%m%dT%H%M%SZ");
        let dir = out.join(format!("{stamp}-{}", &hash[..12]));
        fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        fs::write(dir.join("report.txt"), self.to_text()).context("writing report.txt")?;
        fs::write(dir.join("report.json"), json).context("writing report.json")?;
        Ok(dir)
    }
}

/// Fail beats inconclusive beats pass.
pub fn overall(records: &[ClaimRecord]) -> Status {
    if records.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else if records.iter().any(|r| r.status == Status::Inconclusive) {
        Status::Inconclusive
    } else {
        Status::Pass
    }
}
