//! Run configuration: command-line values, optionally backed by a
//! `key = value` file.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub p: Option<u64>,
    pub a: Option<String>,
    pub b: Option<String>,
    pub c: Option<String>,
    pub d: Option<String>,
    pub e: Option<String>,
    pub x: Option<String>,
    pub steps: Option<usize>,
    pub depth: Option<u32>,
    pub iters: Option<u64>,
    pub q: Option<String>,
    pub kmax: Option<u32>,
    pub m: Option<u32>,
    pub r_exp: Vec<String>,
    pub grid_num: Option<i64>,
    pub grid_den: Option<i64>,
    pub max_bits: Option<u64>,
}

/// `key = value` lines; blank lines and `#` comments are skipped. Keys may
/// use `-` or `_`.
pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("config line {}: {raw}", i + 1)))?;
        out.insert(k.trim().replace('-', "_"), v.trim().to_string());
    }
    Ok(out)
}

fn num<T: std::str::FromStr>(k: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Parse(format!("{k} = {v}")))
}

impl RunConfig {
    /// Fill every unset field from config-file entries; explicit values win.
    pub fn fill_from(&mut self, entries: &BTreeMap<String, String>) -> Result<()> {
        for (k, v) in entries {
            let v = v.as_str();
            match k.as_str() {
                "p" => self.p = self.p.or(Some(num(k, v)?)),
                "a" => fill(&mut self.a, v),
                "b" => fill(&mut self.b, v),
                "c" => fill(&mut self.c, v),
                "d" => fill(&mut self.d, v),
                "e" => fill(&mut self.e, v),
                "x" => fill(&mut self.x, v),
                "q" => fill(&mut self.q, v),
                "steps" => self.steps = self.steps.or(Some(num(k, v)?)),
                "depth" => self.depth = self.depth.or(Some(num(k, v)?)),
                "iters" => self.iters = self.iters.or(Some(num(k, v)?)),
                "kmax" => self.kmax = self.kmax.or(Some(num(k, v)?)),
                "m" => self.m = self.m.or(Some(num(k, v)?)),
                "grid_num" => self.grid_num = self.grid_num.or(Some(num(k, v)?)),
                "grid_den" => self.grid_den = self.grid_den.or(Some(num(k, v)?)),
                "max_bits" => self.max_bits = self.max_bits.or(Some(num(k, v)?)),
                "r_exp" => {
                    if self.r_exp.is_empty() {
                        self.r_exp = v.split(',').map(|s| s.trim().to_string()).collect();
                    }
                }
                other => return Err(Error::Parse(format!("unknown config key {other:?}"))),
            }
        }
        Ok(())
    }

    pub fn fill_from_file(&mut self, path: &std::path::Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.fill_from(&parse_config_text(&text)?)
    }
}

fn fill(slot: &mut Option<String>, v: &str) {
    if slot.is_none() {
        *slot = Some(v.to_string());
    }
}
