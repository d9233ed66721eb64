//! Flat, fully resolved run configuration.
//!
//! Precedence is command-line flags, then the configuration file, then the
//! built-in defaults. A file may be a flat TOML document using the keys of
//! [`Settings`] or a JSON manifest written by a previous run.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use shepherd_core::{
    AlignmentSign, Layout, ModelParams, Placement, PolicyKind, ScenarioConfig, Vec2,
};

use crate::manifest::RunManifest;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Settings {
    pub policy: PolicyKind,
    pub placement: Placement,
    /// Number of shepherds for `run`.
    pub m: usize,
    pub n_sheep: usize,
    pub seed: u64,
    pub trials: usize,
    /// Shepherd counts swept by `batch`.
    pub m_values: Vec<usize>,
    pub record_trajectory: bool,

    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    pub r: f64,
    pub r_prime: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub d4: f64,
    pub alpha: f64,
    pub theta: f64,
    pub r_under: f64,
    pub r_ots: f64,
    pub d_ots: f64,
    pub goal_x: f64,
    pub goal_y: f64,
    pub goal_radius: f64,
    pub max_steps: u32,
    pub alignment_sign: AlignmentSign,

    pub sheep_radius: f64,
    pub cluster_offset: f64,
    pub cluster_radius: f64,
    pub ring_radius: f64,
}

impl Default for Settings {
    fn default() -> Self {
        let p = ModelParams::default();
        let layout = Layout::default();
        Settings {
            policy: PolicyKind::Proposed,
            placement: Placement::BottomLeft,
            m: 3,
            n_sheep: 50,
            seed: 1,
            trials: 100,
            m_values: (1..=10).collect(),
            record_trajectory: true,
            c1: p.c1,
            c2: p.c2,
            c3: p.c3,
            c4: p.c4,
            r: p.r,
            r_prime: p.r_prime,
            d1: p.d1,
            d2: p.d2,
            d3: p.d3,
            d4: p.d4,
            alpha: p.alpha,
            theta: p.theta,
            r_under: p.r_under,
            r_ots: p.r_ots,
            d_ots: p.d_ots,
            goal_x: p.goal_center.x,
            goal_y: p.goal_center.y,
            goal_radius: p.goal_radius,
            max_steps: p.max_steps,
            alignment_sign: p.alignment_sign,
            sheep_radius: layout.sheep_radius,
            cluster_offset: layout.cluster_offset,
            cluster_radius: layout.cluster_radius,
            ring_radius: layout.ring_radius,
        }
    }
}

impl Settings {
    /// Reads a TOML configuration or a JSON manifest (by `.json` extension).
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let settings = if path.extension().is_some_and(|e| e == "json") {
            serde_json::from_str::<RunManifest>(&text)
                .with_context(|| format!("parsing manifest {}", path.display()))?
                .config
        } else {
            toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?
        };
        Ok(settings)
    }

    pub fn to_toml(&self) -> Result<String> {
        Ok(toml::to_string(self)?)
    }

    pub fn params(&self) -> ModelParams {
        ModelParams {
            c1: self.c1,
            c2: self.c2,
            c3: self.c3,
            c4: self.c4,
            r: self.r,
            r_prime: self.r_prime,
            d1: self.d1,
            d2: self.d2,
            d3: self.d3,
            d4: self.d4,
            alpha: self.alpha,
            theta: self.theta,
            r_under: self.r_under,
            r_ots: self.r_ots,
            d_ots: self.d_ots,
            goal_center: Vec2::new(self.goal_x, self.goal_y),
            goal_radius: self.goal_radius,
            max_steps: self.max_steps,
            alignment_sign: self.alignment_sign,
        }
    }

    pub fn layout(&self) -> Layout {
        Layout {
            sheep_radius: self.sheep_radius,
            cluster_offset: self.cluster_offset,
            cluster_radius: self.cluster_radius,
            ring_radius: self.ring_radius,
        }
    }

    /// Scenario for a single `run`.
    pub fn scenario(&self) -> ScenarioConfig {
        ScenarioConfig {
            n_sheep: self.n_sheep,
            n_shepherds: self.m,
            placement: self.placement,
            seed: self.seed,
            params: self.params(),
            policy: self.policy,
            layout: self.layout(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            bail!("invalid m: the number of shepherds must be >= 1");
        }
        if self.n_sheep == 0 {
            bail!("invalid n_sheep: the number of sheep must be >= 1");
        }
        if self.trials == 0 {
            bail!("invalid trials: must be >= 1");
        }
        if self.m_values.is_empty() || self.m_values.contains(&0) {
            bail!("invalid m_values: need at least one shepherd count, each >= 1");
        }
        self.scenario().validate()?;
        Ok(())
    }
}
