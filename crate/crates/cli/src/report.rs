//! Run reports: the same checks rendered as text or JSON.

use std::time::Duration;

use serde_json::{json, Map, Value};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    /// `(path, sha256)` of every input file.
    pub inputs: Vec<(String, String)>,
    /// Human-readable body.
    pub lines: Vec<String>,
    /// Machine-readable body.
    pub data: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: String) -> Report {
        Report { command, ..Report::default() }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn data(&mut self, key: &str, v: Value) {
        self.data.insert(key.to_string(), v);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, details: Vec<String>) {
        self.checks.push(Check { name: name.into(), passed, details });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render_text(&self, elapsed: Option<Duration>) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (path, digest) in &self.inputs {
            out += &format!("input: {path} sha256={digest}\n");
        }
        for l in &self.lines {
            out += l;
            out.push('\n');
        }
        for c in &self.checks {
            out += &format!("[{}] {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name);
            for d in &c.details {
                out += &format!("    {d}\n");
            }
        }
        out += &format!("verdict: {}\n", if self.passed() { "PASS" } else { "FAIL" });
        if let Some(t) = elapsed {
            out += &format!("wall time: {:.3} s\n", t.as_secs_f64());
        }
        out
    }

    pub fn render_json(&self, elapsed: Option<Duration>) -> String {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "status": if c.passed { "pass" } else { "fail" }, "details": c.details}))
            .collect();
        let inputs: Vec<Value> = self.inputs.iter().map(|(p, d)| json!({"path": p, "sha256": d})).collect();
        let mut v = json!({
            "command": self.command,
            "inputs": inputs,
            "checks": checks,
            "data": Value::Object(self.data.clone()),
            "verdict": if self.passed() { "pass" } else { "fail" },
        });
        if let Some(t) = elapsed {
            v["wall_time_s"] = json!(t.as_secs_f64());
        }
        let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
        s.push('\n');
        s
    }
}
