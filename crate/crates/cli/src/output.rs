// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;

/// Tabular result of one command plus free-form metadata.
pub struct Artifact {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Column name → meaning and unit.
    pub columns: Vec<(&'static str, &'static str)>,
    pub summary: Value,
    pub warnings: Vec<String>,
    /// Set when a steady state timed out; the CLI exits with code 3.
    pub timeout: Option<Value>,
}

impl Artifact {
    pub fn new(header: Vec<&'static str>, columns: Vec<(&'static str, &'static str)>) -> Self {
        Self {
            header,
            rows: Vec::new(),
            columns,
            summary: Value::Null,
            warnings: Vec::new(),
            timeout: None,
        }
    }
}

#[derive(Serialize)]
struct Sidecar<'a> {
    command: &'a str,
    version: &'a str,
    wall_time_s: f64,
    config: &'a RunConfig,
    columns: serde_json::Map<String, Value>,
    summary: &'a Value,
    warnings: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    timeout: Option<&'a Value>,
}

/// Shortest round-trip representation, with an exponent for very large or
/// small magnitudes.
pub fn float(x: f64) -> String {
    format!("{x:?}")
}

/// Writes `<command>.csv` and `<command>.json` under `dir`.
pub fn write(
    dir: &Path,
    command: &str,
    config: &RunConfig,
    artifact: &Artifact,
    wall_time_s: f64,
) -> anyhow::Result<(PathBuf, PathBuf)> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let csv_path = dir.join(format!("{command}.csv"));
    let mut w = csv::Writer::from_path(&csv_path).with_context(|| format!("cannot write {}", csv_path.display()))?;
    w.write_record(&artifact.header)?;
    for row in &artifact.rows {
        w.write_record(row)?;
    }
    w.flush()?;

    let json_path = dir.join(format!("{command}.json"));
    let sidecar = Sidecar {
        command,
        version: env!("CARGO_PKG_VERSION"),
        wall_time_s,
        config,
        columns: artifact
            .columns
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect(),
        summary: &artifact.summary,
        warnings: &artifact.warnings,
        timeout: artifact.timeout.as_ref(),
    };
    fs::write(&json_path, serde_json::to_string_pretty(&sidecar)? + "\n")
        .with_context(|| format!("cannot write {}", json_path.display()))?;
    Ok((csv_path, json_path))
}
