use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use shepherd_core::{
    make_scenario, run_trial, sweep_with_progress, Placement, PolicyKind, SweepRow, TrialResult,
};

use crate::cli::OUT_DIR_ENV;
use crate::manifest::RunManifest;
use crate::output::{write_metrics, write_plot_data, write_trajectory_file, PlotMetric};
use crate::settings::Settings;

pub const METRICS_FILE: &str = "metrics.csv";
pub const MANIFEST_FILE: &str = "manifest.json";

fn default_out_dir(fallback: &str) -> PathBuf {
    std::env::var_os(OUT_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(fallback))
}

pub fn default_run_out() -> PathBuf {
    default_out_dir(".").join("trajectory.csv")
}

pub fn default_batch_out() -> PathBuf {
    default_out_dir("out")
}

fn write_manifest(path: &Path, manifest: &RunManifest) -> Result<()> {
    let json = serde_json::to_string_pretty(manifest)?;
    fs::write(path, json + "\n")
        .with_context(|| format!("cannot write manifest to {}", path.display()))
}

/// Sidecar manifest path for a single output file, `<file>.manifest.json`.
pub fn sidecar_manifest(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    path.with_file_name(name)
}

pub fn summary_line(result: &TrialResult) -> String {
    format!(
        "success={} steps={} mean_path_len={:.6}",
        result.success, result.steps, result.mean_path_len
    )
}

/// Runs one trial; writes the trajectory (when enabled) and its manifest.
pub fn cmd_run(settings: &Settings, out: &Path) -> Result<TrialResult> {
    settings.validate()?;
    let world = make_scenario(&settings.scenario())?;
    let result = run_trial(&world, settings.policy, settings.record_trajectory)?;
    if let Some(frames) = &result.trajectory {
        if let Some(parent) = out.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent)
                .with_context(|| format!("cannot create {}", parent.display()))?;
        }
        write_trajectory_file(out, frames)?;
        write_manifest(&sidecar_manifest(out), &RunManifest::new("run", settings))?;
    }
    Ok(result)
}

/// Sweeps all policies and placements over `m_values`; writes the metrics
/// table, the manifest and (optionally) plot data into `out_dir`.
pub fn cmd_batch(
    settings: &Settings,
    out_dir: &Path,
    plot_data: bool,
    progress: impl FnMut(&SweepRow),
) -> Result<Vec<SweepRow>> {
    settings.validate()?;
    fs::create_dir_all(out_dir)
        .with_context(|| format!("cannot create output directory {}", out_dir.display()))?;
    let metrics_path = out_dir.join(METRICS_FILE);
    // fail on an unwritable directory before spending minutes simulating
    fs::File::create(&metrics_path)
        .with_context(|| format!("cannot write {}", metrics_path.display()))?;

    let rows = sweep_with_progress(
        &settings.scenario(),
        &PolicyKind::ALL,
        &Placement::ALL,
        &settings.m_values,
        settings.trials,
        progress,
    )?;

    write_metrics(fs::File::create(&metrics_path)?, &rows)?;
    if plot_data {
        for metric in PlotMetric::ALL {
            let path = out_dir.join(metric.file_name());
            let file = fs::File::create(&path)
                .with_context(|| format!("cannot write {}", path.display()))?;
            write_plot_data(file, &rows, metric)?;
        }
    }
    write_manifest(
        &out_dir.join(MANIFEST_FILE),
        &RunManifest::new("batch", settings),
    )?;
    Ok(rows)
}
