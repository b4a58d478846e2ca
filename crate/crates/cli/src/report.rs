//! Command reports: a JSON tree printed either as JSON or as a flat table.

use clap::ValueEnum;
use serde_json::{Map, Value};

/// Significant digits kept for every reported number.
pub const REPORT_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

/// Rounds to [`REPORT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", REPORT_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Report number, or `null` for a missing value.
pub fn num(x: impl Into<Option<f64>>) -> Value {
    match x.into() {
        Some(v) if v.is_finite() => Value::from(round_sig(v)),
        _ => Value::Null,
    }
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

/// Output of one command plus the process exit code it asks for.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: Value,
    pub exit_code: u8,
}

impl Report {
    /// Starts a report carrying the library version, command name and input echo.
    pub fn new(command: &str, input: Value) -> Self {
        let mut body = Map::new();
        body.insert("version".into(), realign_core::VERSION.into());
        body.insert("command".into(), command.into());
        body.insert("input".into(), input);
        Self {
            body: Value::Object(body),
            exit_code: 0,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        if let Value::Object(map) = &mut self.body {
            map.insert(key.into(), value.into());
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.body.get(key)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => serde_json::to_string_pretty(&self.body).expect("report serializes"),
            OutputFormat::Table => {
                let mut rows = Vec::new();
                flatten("", &self.body, &mut rows);
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                rows.iter()
                    .map(|(k, v)| format!("{k:<width$}  {v}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
    }
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, rows);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, rows);
            }
        }
        Value::String(s) => rows.push((prefix.into(), s.clone())),
        other => rows.push((prefix.into(), other.to_string())),
    }
}
