//! CSV formats for trajectories, metrics tables and plot data.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use shepherd_core::{Frame, PolicyKind, SampleStats, SweepRow, Vec2};

pub const TRAJECTORY_HEADER: [&str; 5] = ["t", "agent_kind", "agent_id", "x", "y"];
pub const METRICS_HEADER: [&str; 11] = [
    "policy",
    "placement",
    "m",
    "trials",
    "success_rate",
    "ct_mean",
    "ct_sd",
    "ct_ci",
    "apl_mean",
    "apl_sd",
    "apl_ci",
];

/// Decimal rendering with at most 9 significant digits; undefined values
/// (NaN) become empty fields.
pub fn fmt_sig9(x: f64) -> String {
    if !x.is_finite() {
        return String::new();
    }
    let rounded: f64 = format!("{x:.8e}").parse().expect("formatted float parses");
    format!("{rounded}")
}

pub fn write_trajectory<W: Write>(writer: W, frames: &[Frame]) -> Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(TRAJECTORY_HEADER)?;
    for frame in frames {
        let t = frame.t.to_string();
        let kinds = [("sheep", &frame.sheep), ("shepherd", &frame.shepherds)];
        for (kind, positions) in kinds {
            for (id, p) in positions.iter().enumerate() {
                out.write_record([&t, kind, &id.to_string(), &fmt_sig9(p.x), &fmt_sig9(p.y)])?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

pub fn write_trajectory_file(path: &Path, frames: &[Frame]) -> Result<()> {
    let file = File::create(path)
        .with_context(|| format!("cannot write trajectory to {}", path.display()))?;
    write_trajectory(io::BufWriter::new(file), frames)
}

/// Reads frames back from a trajectory CSV.
pub fn read_trajectory(path: &Path) -> Result<Vec<Frame>> {
    let mut reader =
        csv::Reader::from_path(path).with_context(|| format!("reading {}", path.display()))?;
    if reader.headers()?.iter().ne(TRAJECTORY_HEADER) {
        bail!("{} is not a trajectory file", path.display());
    }
    let mut frames: Vec<Frame> = Vec::new();
    for record in reader.records() {
        let record = record?;
        let t: u32 = record[0].parse()?;
        let id: usize = record[2].parse()?;
        let pos = Vec2::new(record[3].parse()?, record[4].parse()?);
        if frames.last().is_none_or(|f| f.t != t) {
            frames.push(Frame {
                t,
                sheep: Vec::new(),
                shepherds: Vec::new(),
            });
        }
        let frame = frames.last_mut().expect("frame pushed above");
        let list = match &record[1] {
            "sheep" => &mut frame.sheep,
            "shepherd" => &mut frame.shepherds,
            other => bail!("unknown agent kind `{other}`"),
        };
        if list.len() != id {
            bail!("agent ids out of order at t={t}");
        }
        list.push(pos);
    }
    Ok(frames)
}

fn stats_fields(s: &SampleStats) -> [String; 3] {
    [fmt_sig9(s.mean), fmt_sig9(s.sd), fmt_sig9(s.ci_half_width)]
}

pub fn write_metrics<W: Write>(writer: W, rows: &[SweepRow]) -> Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(METRICS_HEADER)?;
    for row in rows {
        let m = &row.metrics;
        let [ct_mean, ct_sd, ct_ci] = stats_fields(&m.completion_time);
        let [apl_mean, apl_sd, apl_ci] = stats_fields(&m.avg_path_length);
        out.write_record([
            row.policy.as_str(),
            row.placement.as_str(),
            &row.m.to_string(),
            &m.trials.to_string(),
            &fmt_sig9(m.success_rate),
            &ct_mean,
            &ct_sd,
            &ct_ci,
            &apl_mean,
            &apl_sd,
            &apl_ci,
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// Which measure a plot-data file carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotMetric {
    SuccessRate,
    CompletionTime,
    PathLength,
}

impl PlotMetric {
    pub const ALL: [PlotMetric; 3] = [
        PlotMetric::SuccessRate,
        PlotMetric::CompletionTime,
        PlotMetric::PathLength,
    ];

    pub fn file_name(self) -> &'static str {
        match self {
            PlotMetric::SuccessRate => "plot_success_rate.csv",
            PlotMetric::CompletionTime => "plot_completion_time.csv",
            PlotMetric::PathLength => "plot_path_length.csv",
        }
    }

    /// (value, CI half-width) of this measure for one cell.
    fn value(self, row: &SweepRow) -> (f64, Option<f64>) {
        let m = &row.metrics;
        match self {
            PlotMetric::SuccessRate => (m.success_rate, None),
            PlotMetric::CompletionTime => (
                m.completion_time.mean,
                Some(m.completion_time.ci_half_width),
            ),
            PlotMetric::PathLength => (
                m.avg_path_length.mean,
                Some(m.avg_path_length.ci_half_width),
            ),
        }
    }
}

/// One row per (placement, M) with a column (and CI column, for means) per
/// policy.
pub fn write_plot_data<W: Write>(writer: W, rows: &[SweepRow], metric: PlotMetric) -> Result<()> {
    let mut policies: Vec<PolicyKind> = Vec::new();
    let mut cells = Vec::new();
    for row in rows {
        if !policies.contains(&row.policy) {
            policies.push(row.policy);
        }
        if !cells.contains(&(row.placement, row.m)) {
            cells.push((row.placement, row.m));
        }
    }

    let mut header = vec!["placement".to_string(), "m".to_string()];
    for p in &policies {
        header.push(p.as_str().to_string());
        if metric != PlotMetric::SuccessRate {
            header.push(format!("{p}_ci"));
        }
    }

    let mut out = csv::Writer::from_writer(writer);
    out.write_record(&header)?;
    for (placement, m) in cells {
        let mut record = vec![placement.as_str().to_string(), m.to_string()];
        for &policy in &policies {
            let row = rows
                .iter()
                .find(|r| r.policy == policy && r.placement == placement && r.m == m);
            let (value, ci) = row.map_or((f64::NAN, Some(f64::NAN)), |r| metric.value(r));
            record.push(fmt_sig9(value));
            if metric != PlotMetric::SuccessRate {
                record.push(fmt_sig9(ci.unwrap_or(f64::NAN)));
            }
        }
        out.write_record(&record)?;
    }
    out.flush()?;
    Ok(())
}
