use serde::{Deserialize, Serialize};
use shepherd_core::RNG_ALGORITHM;

use crate::settings::Settings;

pub const CI_METHOD: &str =
    "normal approximation 95% CI of the mean: 1.96 * sd / sqrt(count), sd = sample standard deviation over successful trials";

/// Everything needed to reproduce an output file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub rng: String,
    pub ci_method: String,
    pub timestamp: String,
    pub config: Settings,
}

impl RunManifest {
    pub fn new(command: &str, config: &Settings) -> Self {
        RunManifest {
            tool: "shepherd".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            rng: RNG_ALGORITHM.into(),
            ci_method: CI_METHOD.into(),
            timestamp: chrono::Utc::now().to_rfc3339(),
            config: config.clone(),
        }
    }
}
