//! Initial configurations: sheep on a disc around the origin, shepherds in
//! one of three placement patterns, all drawn from a seeded generator.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};
use crate::params::ModelParams;
use crate::policy::PolicyKind;
use crate::vec2::Vec2;
use crate::world::WorldState;

/// Name of the generator behind every sampled scenario, recorded in outputs.
pub const RNG_ALGORITHM: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64), per-trial seed = splitmix64(base + (index + 1) * 0x9E3779B97F4A7C15)";

pub type ScenarioRng = ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Placement {
    BottomLeft,
    TopRight,
    Surrounding,
}

impl Placement {
    pub const ALL: [Placement; 3] = [
        Placement::BottomLeft,
        Placement::TopRight,
        Placement::Surrounding,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Placement::BottomLeft => "bottom-left",
            Placement::TopRight => "top-right",
            Placement::Surrounding => "surrounding",
        }
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Placement {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        Placement::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| SimError::UnknownPlacement(s.to_string()))
    }
}

/// Geometry of the initial placements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Layout {
    /// Radius of the disc around the origin the sheep start on.
    pub sheep_radius: f64,
    /// Corner clusters are centered at `(±cluster_offset, ±cluster_offset)`.
    pub cluster_offset: f64,
    pub cluster_radius: f64,
    /// Radius of the circle for the surrounding pattern.
    pub ring_radius: f64,
}

impl Default for Layout {
    fn default() -> Self {
        Layout {
            sheep_radius: 80.0,
            cluster_offset: 100.0,
            cluster_radius: 20.0,
            ring_radius: 100.0,
        }
    }
}

impl Layout {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("sheep_radius", self.sheep_radius),
            ("cluster_radius", self.cluster_radius),
            ("ring_radius", self.ring_radius),
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(SimError::InvalidParam {
                    name,
                    reason: format!("must be finite and > 0, got {v}"),
                });
            }
        }
        if !self.cluster_offset.is_finite() {
            return Err(SimError::InvalidParam {
                name: "cluster_offset",
                reason: "must be finite".into(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub n_sheep: usize,
    pub n_shepherds: usize,
    pub placement: Placement,
    pub seed: u64,
    pub params: ModelParams,
    pub policy: PolicyKind,
    pub layout: Layout,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            n_sheep: 50,
            n_shepherds: 3,
            placement: Placement::BottomLeft,
            seed: 0,
            params: ModelParams::default(),
            policy: PolicyKind::Proposed,
            layout: Layout::default(),
        }
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_sheep == 0 {
            return Err(SimError::InvalidParam {
                name: "n_sheep",
                reason: "must be >= 1".into(),
            });
        }
        if self.n_shepherds == 0 {
            return Err(SimError::InvalidParam {
                name: "n_shepherds",
                reason: "must be >= 1".into(),
            });
        }
        self.params.validate()?;
        self.layout.validate()
    }
}

/// Uniform point on the disc of `radius` around `center`.
fn sample_in_disc<R: Rng + ?Sized>(rng: &mut R, center: Vec2, radius: f64) -> Vec2 {
    let u: f64 = rng.gen();
    let v: f64 = rng.gen();
    let rho = radius * u.sqrt();
    let angle = 2.0 * PI * v;
    center + Vec2::new(rho * angle.cos(), rho * angle.sin())
}

/// `n` points uniform by area on the disc of `radius` around the origin.
pub fn sample_sheep_positions<R: Rng + ?Sized>(rng: &mut R, n: usize, radius: f64) -> Vec<Vec2> {
    (0..n)
        .map(|_| sample_in_disc(rng, Vec2::ZERO, radius))
        .collect()
}

pub fn sample_shepherd_positions<R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    placement: Placement,
    layout: &Layout,
) -> Vec<Vec2> {
    let offset = layout.cluster_offset;
    match placement {
        Placement::BottomLeft => (0..m)
            .map(|_| sample_in_disc(rng, Vec2::new(-offset, -offset), layout.cluster_radius))
            .collect(),
        Placement::TopRight => (0..m)
            .map(|_| sample_in_disc(rng, Vec2::new(offset, offset), layout.cluster_radius))
            .collect(),
        Placement::Surrounding => (0..m)
            .map(|_| {
                let angle = 2.0 * PI * rng.gen::<f64>();
                Vec2::new(
                    layout.ring_radius * angle.cos(),
                    layout.ring_radius * angle.sin(),
                )
            })
            .collect(),
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `index` in a batch with `base` seed.
pub fn trial_seed(base: u64, index: u64) -> u64 {
    splitmix64(base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

pub fn scenario_rng(seed: u64) -> ScenarioRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Initial world for `config`: sheep are drawn first, then shepherds.
pub fn make_scenario(config: &ScenarioConfig) -> Result<WorldState> {
    config.validate()?;
    let mut rng = scenario_rng(config.seed);
    let sheep = sample_sheep_positions(&mut rng, config.n_sheep, config.layout.sheep_radius);
    let shepherds = sample_shepherd_positions(
        &mut rng,
        config.n_shepherds,
        config.placement,
        &config.layout,
    );
    WorldState::new(&sheep, &shepherds, config.params.clone())
}
