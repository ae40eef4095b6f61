//! Run reports: input digests, decision metadata, exact results and
//! segregated timings.

use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use ellone::rational::{format_decimal, parse_rational};

/// Digits after the point in display-only decimal renderings.
pub const DECIMAL_DIGITS: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(role: &str, path: &Path, bytes: &[u8]) -> Self {
        Self { role: role.into(), path: path.display().to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Decisions {
    pub pivot_rule: Option<String>,
    pub homotopy: Option<String>,
    pub bruhat: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub decisions: Decisions,
    pub results: Value,
    /// Decimal rendering of `results`, present only with `--decimal`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub display: Option<Value>,
    /// Wall-clock measurements; the only fields that vary between runs.
    pub timing: Map<String, Value>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Vec<InputDigest>, decisions: Decisions, results: Value) -> Self {
        Self { command: command.into(), inputs, decisions, results, display: None, timing: Map::new() }
    }

    pub fn with_decimal(mut self) -> Self {
        let mut display = Map::new();
        display.insert("display_only".into(), Value::Bool(true));
        display.insert("results".into(), decimalize(&self.results));
        self.display = Some(Value::Object(display));
        self
    }

    pub fn time(&mut self, key: &str, seconds: f64) {
        self.timing.insert(key.into(), serde_json::json!(seconds));
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Replaces every exact `"p/q"` string by its decimal rendering.
fn decimalize(v: &Value) -> Value {
    match v {
        Value::String(s) if s.contains('/') || s.parse::<i64>().is_ok() => match parse_rational(s) {
            Ok(q) => Value::String(format_decimal(&q, DECIMAL_DIGITS)),
            Err(_) => v.clone(),
        },
        Value::Array(items) => Value::Array(items.iter().map(decimalize).collect()),
        Value::Object(map) => Value::Object(map.iter().map(|(k, x)| (k.clone(), decimalize(x))).collect()),
        _ => v.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rendering_leaves_names_alone() {
        let v = serde_json::json!({"value": "1/3", "name": "U0", "count": 3, "list": ["-2"]});
        let d = decimalize(&v);
        assert_eq!(d["value"], "0.333333333333");
        assert_eq!(d["name"], "U0");
        assert_eq!(d["count"], 3);
        assert_eq!(d["list"][0], "-2.000000000000");
    }
}
