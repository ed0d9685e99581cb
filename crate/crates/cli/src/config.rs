//! `key=value` run settings; command-line flags take precedence.

use std::path::Path;

use extremal_core::envelope::DEFAULT_TOL;
use extremal_core::solvers::{DEFAULT_NODE_BUDGET, DEFAULT_SM_LIMIT, DEFAULT_SS_LIMIT};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct Settings {
    pub seed: u64,
    pub tol: f64,
    pub budget: u64,
    pub trials: usize,
    pub ss_limit: usize,
    pub sm_limit: usize,
    pub format: String,
    pub timing: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            seed: 0,
            tol: DEFAULT_TOL,
            budget: DEFAULT_NODE_BUDGET,
            trials: 100,
            ss_limit: DEFAULT_SS_LIMIT,
            sm_limit: DEFAULT_SM_LIMIT,
            format: "json".into(),
            timing: false,
        }
    }
}

/// Flag values given on the command line; `None` means "not given".
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub budget: Option<u64>,
    pub trials: Option<usize>,
    pub format: Option<String>,
    pub timing: bool,
}

impl Settings {
    /// Applies `key=value` lines on top of `self`. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn apply_config(&mut self, text: &str) -> Result<(), CliError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Parse(format!("config line {}: expected key=value", i + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || {
                CliError::Parse(format!(
                    "config line {}: bad value for {key}: {value:?}",
                    i + 1
                ))
            };
            match key {
                "seed" => self.seed = value.parse().map_err(|_| bad())?,
                "tol" => self.tol = value.parse().map_err(|_| bad())?,
                "budget" => self.budget = value.parse().map_err(|_| bad())?,
                "trials" => self.trials = value.parse().map_err(|_| bad())?,
                "ss_limit" => self.ss_limit = value.parse().map_err(|_| bad())?,
                "sm_limit" => self.sm_limit = value.parse().map_err(|_| bad())?,
                "format" => self.format = value.to_string(),
                "timing" => self.timing = value.parse().map_err(|_| bad())?,
                _ => {
                    return Err(CliError::Parse(format!(
                        "config line {}: unknown key {key:?}",
                        i + 1
                    )))
                }
            }
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::Parse(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }

    pub fn load(config: Option<&Path>, overrides: &Overrides) -> Result<Self, CliError> {
        let mut s = Settings::default();
        if let Some(path) = config {
            s.apply_config(&std::fs::read_to_string(path)?)?;
        }
        if let Some(v) = overrides.seed {
            s.seed = v;
        }
        if let Some(v) = overrides.tol {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Parse(format!("tol must be positive, got {v}")));
            }
            s.tol = v;
        }
        if let Some(v) = overrides.budget {
            s.budget = v;
        }
        if let Some(v) = overrides.trials {
            s.trials = v;
        }
        if let Some(v) = &overrides.format {
            s.format = v.clone();
        }
        s.timing |= overrides.timing;
        Ok(s)
    }
}
