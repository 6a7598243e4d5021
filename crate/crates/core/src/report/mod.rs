//! Structured reports behind the `padyn` binary: JSON with sorted keys, or
//! an indented `key: value` text rendering of the same tree.

mod commands;
mod config;

pub use commands::{
    cert_json, cmd_classify, cmd_ergodicity, cmd_orbit, cmd_periodic, cmd_radii, cmd_reduce, cmd_spheres,
    ladder_csv, map_summary, verdict_json, Output,
};
pub use config::{parse_config_text, RunConfig};

use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub map: Option<Value>,
    pub payload: Value,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "map": self.map.clone().unwrap_or(Value::Null),
            "result": self.payload,
            "warnings": self.warnings,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("json values always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render(&self.to_value(), 0, &mut out);
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(p: u64, a: &str, b: &str) -> RunConfig {
        RunConfig { p: Some(p), a: Some(a.into()), b: Some(b.into()), ..RunConfig::default() }
    }

    #[test]
    fn classify_example_map() {
        let out = cmd_classify(&cfg(2, "5/2", "1")).unwrap();
        let v = out.report.to_value();
        assert_eq!(v["map"]["case"], "phi");
        assert_eq!(v["map"]["alpha_exp"], "-1");
        assert_eq!(v["map"]["beta_exp"], "1");
        assert!(out.report.to_text().contains("case: phi"));
    }

    #[test]
    fn ergodicity_keys_are_frozen() {
        let mut c = cfg(2, "5/2", "1");
        c.r_exp = vec!["0".into()];
        let v = cmd_ergodicity(&c).unwrap().report.to_value();
        let keys: Vec<_> = v["result"].as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["memic", "reason", "sphere_exp", "verdict", "witness_ball"]);
        assert_eq!(v["result"]["verdict"], "ergodic");
    }

    #[test]
    fn missing_flag_is_an_error() {
        let c = RunConfig { p: Some(2), ..RunConfig::default() };
        assert!(cmd_classify(&c).is_err());
    }

    #[test]
    fn ladder_csv_rows() {
        let mut c = cfg(2, "2", "1");
        c.kmax = Some(2);
        let csv = cmd_radii(&c).unwrap().csv.unwrap();
        assert!(csv.starts_with("k,exp_num,exp_den\n"));
        assert_eq!(csv.lines().count(), 4);
        assert!(cmd_radii(&cfg(2, "5/2", "1")).is_err());
    }
}
