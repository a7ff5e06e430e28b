//! Run configuration: resource caps, seed and tolerances.
//!
//! Values come from command-line flags, then from the JSON file named by
//! `NOETHER_EL_CAPS`, then from the built-in defaults.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use noether_core::depth::DepthBounds;
use noether_core::matgroup::ELEMENT_CAP;
use noether_core::ring::GbLimits;

pub const CAPS_ENV: &str = "NOETHER_EL_CAPS";
pub const DEFAULT_SEED: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub max_gb_pairs: u64,
    pub max_degree: u32,
    pub max_elements: usize,
    pub bound: u32,
    pub coeff: u32,
    pub seed: u64,
    /// Overrides the floating-point tolerances of the measure and character checks.
    pub tol: Option<f64>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        let gb = GbLimits::default();
        let depth = DepthBounds::default();
        RunConfig {
            max_gb_pairs: gb.max_pairs,
            max_degree: gb.max_degree,
            max_elements: ELEMENT_CAP,
            bound: depth.degree,
            coeff: depth.coeff,
            seed: DEFAULT_SEED,
            tol: None,
            format: Format::Json,
        }
    }
}

/// Optional fields of the caps file; every key may be omitted.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct CapsFile {
    max_gb_pairs: Option<u64>,
    max_degree: Option<u32>,
    max_elements: Option<usize>,
    bound: Option<u32>,
    coeff: Option<u32>,
    seed: Option<u64>,
    tol: Option<f64>,
}

/// Flag values as parsed; `None` means "not given".
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub max_gb_pairs: Option<u64>,
    pub max_elements: Option<usize>,
    pub bound: Option<u32>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub format: Option<Format>,
}

impl RunConfig {
    pub fn resolve(flags: &Overrides, caps_path: Option<&Path>) -> Result<RunConfig> {
        let mut cfg = RunConfig::default();
        if let Some(path) = caps_path {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading caps file {}", path.display()))?;
            let file: CapsFile = serde_json::from_str(&text).with_context(|| format!("parsing caps file {}", path.display()))?;
            cfg.max_gb_pairs = file.max_gb_pairs.unwrap_or(cfg.max_gb_pairs);
            cfg.max_degree = file.max_degree.unwrap_or(cfg.max_degree);
            cfg.max_elements = file.max_elements.unwrap_or(cfg.max_elements);
            cfg.bound = file.bound.unwrap_or(cfg.bound);
            cfg.coeff = file.coeff.unwrap_or(cfg.coeff);
            cfg.seed = file.seed.unwrap_or(cfg.seed);
            cfg.tol = file.tol.or(cfg.tol);
        }
        cfg.max_gb_pairs = flags.max_gb_pairs.unwrap_or(cfg.max_gb_pairs);
        cfg.max_elements = flags.max_elements.unwrap_or(cfg.max_elements);
        cfg.bound = flags.bound.unwrap_or(cfg.bound);
        cfg.seed = flags.seed.unwrap_or(cfg.seed);
        cfg.tol = flags.tol.or(cfg.tol);
        cfg.format = flags.format.unwrap_or(cfg.format);
        cfg.check()?;
        Ok(cfg)
    }

    fn check(&self) -> Result<()> {
        if self.max_gb_pairs == 0 || self.max_degree == 0 || self.max_elements == 0 || self.bound == 0 || self.coeff == 0 {
            bail!("resource caps must be positive");
        }
        if let Some(t) = self.tol {
            if !(t > 0.0 && t.is_finite()) {
                bail!("tolerance must be a positive number");
            }
        }
        Ok(())
    }

    pub fn gb_limits(&self) -> GbLimits {
        GbLimits { max_pairs: self.max_gb_pairs, max_degree: self.max_degree }
    }

    pub fn depth_bounds(&self) -> DepthBounds {
        DepthBounds { degree: self.bound, coeff: self.coeff }
    }

    pub fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}
