//! Run configuration: defaults, `key=value` files, flag overrides.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::comp::CompAlgebra;
use crate::dim::DEFAULT_MONOMIAL_CAP;
use crate::error::{Error, Result};
use crate::realize::DEFAULT_TOLERANCE;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub seed: u64,
    /// Height of random rational coordinates.
    pub height: u64,
    pub monomial_cap: usize,
    pub tolerance: f64,
    /// Suites to run; empty means all.
    pub suites: Vec<String>,
    /// Random points per check.
    pub points: usize,
    /// Restricts suites to one algebra.
    pub algebra: Option<CompAlgebra>,
    /// Restricts copy-dependent suites to one `p`.
    pub copies: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 1,
            height: 10,
            monomial_cap: DEFAULT_MONOMIAL_CAP,
            tolerance: DEFAULT_TOLERANCE,
            suites: Vec::new(),
            points: 20,
            algebra: None,
            copies: None,
        }
    }
}

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|e| Error::Parse(format!("{key}: {e}")))
}

impl Config {
    /// Applies one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key.trim() {
            "seed" => self.seed = parse(key, value)?,
            "height" => self.height = parse(key, value)?,
            "cap" | "monomial_cap" => self.monomial_cap = parse(key, value)?,
            "tolerance" => self.tolerance = parse(key, value)?,
            "points" => self.points = parse(key, value)?,
            "algebra" => self.algebra = Some(parse(key, value)?),
            "copies" => self.copies = Some(parse(key, value)?),
            "suite" | "suites" => {
                self.suites = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect()
            }
            other => return Err(Error::Parse(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    /// Parses a config file: one `key=value` per line, `#` comments.
    pub fn parse_str(text: &str) -> Result<Config> {
        let mut cfg = Config::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key=value, got {line:?}", n + 1)))?;
            cfg.set(k, v)?;
        }
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Config::parse_str(&text)
    }

    /// Algebras selected by the `algebra` filter.
    pub fn algebras(&self) -> Vec<CompAlgebra> {
        match self.algebra {
            Some(a) => vec![a],
            None => CompAlgebra::ALL.to_vec(),
        }
    }

    pub fn wants_copies(&self, p: usize) -> bool {
        self.copies.is_none_or(|c| c == p)
    }
}
