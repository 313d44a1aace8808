//! Structured run reports: a named list of checks with witnesses, input
//! file hashes, optional command-specific data, and both human and JSON
//! rendering. JSON carries exact values only — rationals are strings like
//! "3/2", never floats.

use std::time::Instant;

use ascheme_core::{AlgebraMap, Rational};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Serialize)]
pub struct InputFile {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputFile>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    pub timing_ms: u128,
    #[serde(skip)]
    started: Instant,
}

impl RunReport {
    pub fn new(command: &str) -> RunReport {
        RunReport {
            command: command.into(),
            inputs: Vec::new(),
            checks: Vec::new(),
            data: None,
            timing_ms: 0,
            started: Instant::now(),
        }
    }

    pub fn input(&mut self, path: &str, bytes: &[u8]) {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        self.inputs.push(InputFile {
            path: path.into(),
            sha256: format!("{:x}", hasher.finalize()),
        });
    }

    pub fn check(&mut self, name: &str, pass: bool, witness: Option<String>) {
        self.checks.push(Check { name: name.into(), pass, witness });
    }

    pub fn data(&mut self, value: serde_json::Value) {
        self.data = Some(value);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn finish(&mut self) {
        self.timing_ms = self.started.elapsed().as_millis();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_human(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for c in &self.checks {
            let status = if c.pass { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{status}] {}", c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  ({w})"));
            }
            out.push('\n');
        }
        if let Some(data) = &self.data {
            out.push_str(&render_value(data, 1));
        }
        out
    }
}

fn render_value(v: &serde_json::Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match v {
        serde_json::Value::Object(map) => {
            let mut out = String::new();
            for (k, val) in map {
                match val {
                    serde_json::Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        out.push_str(&render_value(val, indent + 1));
                    }
                    serde_json::Value::Array(items)
                        if items.iter().any(|i| i.is_array() || i.is_object()) =>
                    {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}  {}\n", inline(item)));
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(val))),
                }
            }
            out
        }
        other => format!("{pad}{}\n", inline(other)),
    }
}

fn inline(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(items) => {
            let cells: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", cells.join(" "))
        }
        other => other.to_string(),
    }
}

/// Exact string form of a rational: "2", "-1", "3/2".
pub fn rational_string(r: Rational) -> String {
    if *r.denom() == 1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A map's matrix as rows of exact rational strings.
pub fn matrix_json(map: &AlgebraMap) -> serde_json::Value {
    let (rows, cols) = (map.cod().dim(), map.dom().dim());
    let data: Vec<Vec<String>> = (0..rows)
        .map(|r| (0..cols).map(|c| rational_string(map.entry(r, c))).collect())
        .collect();
    serde_json::json!(data)
}
