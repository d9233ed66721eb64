//! Batch execution and the aggregate performance measures.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{run_trial, TrialResult};
use crate::error::{Result, SimError};
use crate::policy::PolicyKind;
use crate::scenario::{make_scenario, trial_seed, Placement, ScenarioConfig};

/// z-value of the two-sided 95% normal interval.
pub const Z_95: f64 = 1.96;

/// Mean, sample standard deviation and normal-approximation 95% CI
/// half-width. Undefined entries are NaN (mean when empty, spread when a
/// single sample).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleStats {
    pub mean: f64,
    pub sd: f64,
    pub count: usize,
    pub ci_half_width: f64,
}

impl SampleStats {
    pub fn from_samples(samples: &[f64]) -> Self {
        let count = samples.len();
        if count == 0 {
            return SampleStats {
                mean: f64::NAN,
                sd: f64::NAN,
                count,
                ci_half_width: f64::NAN,
            };
        }
        let n = count as f64;
        let mean = samples.iter().sum::<f64>() / n;
        let sd = if count < 2 {
            f64::NAN
        } else {
            (samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0)).sqrt()
        };
        SampleStats {
            mean,
            sd,
            count,
            ci_half_width: Z_95 * sd / n.sqrt(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AggregateMetrics {
    pub trials: usize,
    pub successes: usize,
    pub success_rate: f64,
    /// Over successful trials only.
    pub completion_time: SampleStats,
    /// Mean shepherd path length, over successful trials only.
    pub avg_path_length: SampleStats,
}

impl AggregateMetrics {
    pub fn from_results(results: &[TrialResult]) -> Self {
        let successful: Vec<&TrialResult> = results.iter().filter(|r| r.success).collect();
        let times: Vec<f64> = successful.iter().map(|r| r.steps as f64).collect();
        let paths: Vec<f64> = successful.iter().map(|r| r.mean_path_len).collect();
        AggregateMetrics {
            trials: results.len(),
            successes: successful.len(),
            success_rate: if results.is_empty() {
                0.0
            } else {
                successful.len() as f64 / results.len() as f64
            },
            completion_time: SampleStats::from_samples(&times),
            avg_path_length: SampleStats::from_samples(&paths),
        }
    }
}

/// Runs `n_trials` trials of `base`, trial `i` seeded with
/// `trial_seed(base.seed, i)`. Results are in trial order regardless of
/// scheduling.
pub fn run_batch(
    base: &ScenarioConfig,
    n_trials: usize,
) -> Result<(Vec<TrialResult>, AggregateMetrics)> {
    if n_trials == 0 {
        return Err(SimError::InvalidParam {
            name: "trials",
            reason: "must be >= 1".into(),
        });
    }
    base.validate()?;
    let results = (0..n_trials as u64)
        .into_par_iter()
        .map(|i| {
            let config = ScenarioConfig {
                seed: trial_seed(base.seed, i),
                ..base.clone()
            };
            run_trial(&make_scenario(&config)?, base.policy, false)
        })
        .collect::<Result<Vec<_>>>()?;
    let metrics = AggregateMetrics::from_results(&results);
    Ok((results, metrics))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub policy: PolicyKind,
    pub placement: Placement,
    pub m: usize,
    pub metrics: AggregateMetrics,
}

/// Every combination of `policies`, `placements` and `m_values`, in that
/// nesting order. Each cell uses `base.seed` so all cells with the same
/// shepherd count share sheep layouts.
pub fn sweep(
    base: &ScenarioConfig,
    policies: &[PolicyKind],
    placements: &[Placement],
    m_values: &[usize],
    n_trials: usize,
) -> Result<Vec<SweepRow>> {
    sweep_with_progress(base, policies, placements, m_values, n_trials, |_| {})
}

/// [`sweep`], calling `progress` as each cell completes.
pub fn sweep_with_progress(
    base: &ScenarioConfig,
    policies: &[PolicyKind],
    placements: &[Placement],
    m_values: &[usize],
    n_trials: usize,
    mut progress: impl FnMut(&SweepRow),
) -> Result<Vec<SweepRow>> {
    if m_values.is_empty() {
        return Err(SimError::InvalidParam {
            name: "m_values",
            reason: "at least one shepherd count is required".into(),
        });
    }
    let mut rows = Vec::with_capacity(policies.len() * placements.len() * m_values.len());
    for &policy in policies {
        for &placement in placements {
            for &m in m_values {
                let config = ScenarioConfig {
                    policy,
                    placement,
                    n_shepherds: m,
                    ..base.clone()
                };
                let (_, metrics) = run_batch(&config, n_trials)?;
                let row = SweepRow {
                    policy,
                    placement,
                    m,
                    metrics,
                };
                progress(&row);
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// All four policies and all three placements over `m_values`.
pub fn sweep_shepherd_count(
    base: &ScenarioConfig,
    m_values: &[usize],
    n_trials: usize,
) -> Result<Vec<SweepRow>> {
    sweep(base, &PolicyKind::ALL, &Placement::ALL, m_values, n_trials)
}
