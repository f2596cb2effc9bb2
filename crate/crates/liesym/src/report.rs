//! Structured command reports with twin renderings: human-readable text
//! and JSON. Polynomials appear as canonical strings in both, so the two
//! outputs carry bit-identical polynomial text.

use serde_json::{json, Map, Value};

/// One analysis report: inputs echoed, bounds used, results, certificates,
/// and the overall verdict.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub bounds: Map<String, Value>,
    pub result: Map<String, Value>,
    pub certificates: Map<String, Value>,
    pub valid: bool,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: Map::new(),
            bounds: Map::new(),
            result: Map::new(),
            certificates: Map::new(),
            valid: true,
        }
    }

    pub fn input(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn bound(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.bounds.insert(key.into(), value.into());
        self
    }

    pub fn output(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.result.insert(key.into(), value.into());
        self
    }

    pub fn certificate(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.certificates.insert(key.into(), value.into());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "result": Value::Object(self.result.clone()),
            "certificates": Value::Object(self.certificates.clone()),
            "bounds": Value::Object(self.bounds.clone()),
            "valid": self.valid,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (title, map) in [
            ("inputs", &self.inputs),
            ("bounds", &self.bounds),
            ("result", &self.result),
            ("certificates", &self.certificates),
        ] {
            if map.is_empty() {
                continue;
            }
            out.push_str(title);
            out.push_str(":\n");
            for (k, v) in map {
                render_value(&mut out, k, v, 1);
            }
        }
        out.push_str(&format!("valid: {}\n", self.valid));
        out
    }
}

fn indent(out: &mut String, level: usize) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn render_value(out: &mut String, key: &str, v: &Value, level: usize) {
    match v {
        Value::Array(items) => {
            indent(out, level);
            out.push_str(key);
            out.push_str(":\n");
            for item in items {
                match item {
                    Value::Object(m) => {
                        indent(out, level + 1);
                        out.push_str("-\n");
                        for (k2, v2) in m {
                            render_value(out, k2, v2, level + 2);
                        }
                    }
                    other => {
                        indent(out, level + 1);
                        out.push_str("- ");
                        out.push_str(&scalar_text(other));
                        out.push('\n');
                    }
                }
            }
        }
        Value::Object(m) => {
            indent(out, level);
            out.push_str(key);
            out.push_str(":\n");
            for (k2, v2) in m {
                render_value(out, k2, v2, level + 1);
            }
        }
        other => {
            indent(out, level);
            out.push_str(key);
            out.push_str(": ");
            out.push_str(&scalar_text(other));
            out.push('\n');
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
