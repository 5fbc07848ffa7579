//! Machine-readable run reports shared by the command-line tool.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

/// Settings a run was invoked with, echoed into its report.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RunConfig {
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

/// Outcome of one command: named checks with their witnesses, optional tables, and
/// timings kept apart so that two runs with the same configuration differ only there.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub version: &'static str,
    pub config: RunConfig,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub tables: BTreeMap<String, Value>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl Report {
    pub fn new(suite: impl Into<String>, config: RunConfig) -> Self {
        Report {
            suite: suite.into(),
            version: env!("CARGO_PKG_VERSION"),
            config,
            checks: Vec::new(),
            tables: BTreeMap::new(),
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Serialize) {
        let detail = serde_json::to_value(detail).unwrap_or(Value::Null);
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    pub fn table(&mut self, name: impl Into<String>, value: impl Serialize) {
        self.tables.insert(name.into(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    /// Runs `f`, recording its wall time under `name`.
    pub fn timed<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings_ms.insert(name.to_string(), start.elapsed().as_millis() as u64);
        out
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One line per check, then the tables.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status}  {:width$}  {}", c.name, summary(&c.detail));
        }
        for (name, value) in &self.tables {
            let _ = writeln!(out, "{name}:");
            match value {
                Value::Array(rows) if rows.iter().all(Value::is_array) => {
                    for row in rows {
                        let cells: Vec<String> = row.as_array().unwrap().iter().map(|v| format!("{:>8}", v.to_string())).collect();
                        let _ = writeln!(out, "  {}", cells.join(""));
                    }
                }
                other => {
                    let _ = writeln!(out, "  {other}");
                }
            }
        }
        out
    }
}

fn summary(detail: &Value) -> String {
    let text = detail.to_string();
    if text.chars().count() > 100 { format!("{}…", text.chars().take(100).collect::<String>()) } else { text }
}
