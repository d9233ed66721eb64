use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use shepherd_core::{AlignmentSign, Placement, PolicyKind};

use crate::settings::Settings;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "SHEPHERD_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "shepherd", version, about = "Multi-shepherd herding simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a single trial and write its trajectory.
    Run {
        #[command(flatten)]
        overrides: Overrides,
        /// Trajectory CSV path [default: $SHEPHERD_OUT_DIR/trajectory.csv or ./trajectory.csv]
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep every policy, placement and shepherd count and write metrics.
    Batch {
        #[command(flatten)]
        overrides: Overrides,
        /// Output directory [default: $SHEPHERD_OUT_DIR or ./out]
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the per-metric plot-data files.
        #[arg(long)]
        no_plot_data: bool,
        /// Suppress per-cell progress on stderr.
        #[arg(long, short)]
        quiet: bool,
    },
}

fn parse_policy(s: &str) -> Result<PolicyKind, String> {
    s.parse()
        .map_err(|e: shepherd_core::SimError| e.to_string())
}

fn parse_placement(s: &str) -> Result<Placement, String> {
    s.parse()
        .map_err(|e: shepherd_core::SimError| e.to_string())
}

fn parse_alignment(s: &str) -> Result<AlignmentSign, String> {
    s.parse()
        .map_err(|e: shepherd_core::SimError| e.to_string())
}

/// Flag overrides; every configuration key has one.
#[derive(Debug, Default, Args)]
pub struct Overrides {
    /// TOML configuration file, or a JSON manifest from a previous run.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// proposed | fat | fat-occ | ots
    #[arg(long, value_parser = parse_policy)]
    pub policy: Option<PolicyKind>,
    /// bottom-left | top-right | surrounding
    #[arg(long, value_parser = parse_placement)]
    pub placement: Option<Placement>,
    /// Number of shepherds (run).
    #[arg(long)]
    pub m: Option<usize>,
    /// Shepherd counts to sweep (batch), e.g. 1,2,3.
    #[arg(long, value_delimiter = ',')]
    pub m_values: Option<Vec<usize>>,
    #[arg(long)]
    pub n_sheep: Option<usize>,
    /// Trials per cell (batch).
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub max_steps: Option<u32>,
    /// Write the trajectory file (run).
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub record_trajectory: Option<bool>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub c1: Option<f64>,
    #[arg(long)]
    pub c2: Option<f64>,
    #[arg(long)]
    pub c3: Option<f64>,
    #[arg(long)]
    pub c4: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
    #[arg(long)]
    pub r_prime: Option<f64>,
    #[arg(long)]
    pub d1: Option<f64>,
    #[arg(long)]
    pub d2: Option<f64>,
    #[arg(long)]
    pub d3: Option<f64>,
    #[arg(long)]
    pub d4: Option<f64>,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub r_under: Option<f64>,
    #[arg(long)]
    pub r_ots: Option<f64>,
    #[arg(long)]
    pub d_ots: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub goal_x: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub goal_y: Option<f64>,
    #[arg(long)]
    pub goal_radius: Option<f64>,
    /// as-printed | conventional
    #[arg(long, value_parser = parse_alignment)]
    pub alignment_sign: Option<AlignmentSign>,
    #[arg(long)]
    pub sheep_radius: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub cluster_offset: Option<f64>,
    #[arg(long)]
    pub cluster_radius: Option<f64>,
    #[arg(long)]
    pub ring_radius: Option<f64>,
}

macro_rules! apply {
    ($settings:ident, $overrides:ident, $($field:ident),+ $(,)?) => {
        $(if let Some(v) = $overrides.$field.clone() { $settings.$field = v; })+
    };
}

impl Overrides {
    /// Defaults, then the config file, then these flags.
    pub fn resolve(&self) -> anyhow::Result<Settings> {
        let mut s = match &self.config {
            Some(path) => Settings::from_file(path)?,
            None => Settings::default(),
        };
        apply!(
            s,
            self,
            policy,
            placement,
            m,
            m_values,
            n_sheep,
            trials,
            seed,
            max_steps,
            record_trajectory,
            alpha,
            c1,
            c2,
            c3,
            c4,
            r,
            r_prime,
            d1,
            d2,
            d3,
            d4,
            theta,
            r_under,
            r_ots,
            d_ots,
            goal_x,
            goal_y,
            goal_radius,
            alignment_sign,
            sheep_radius,
            cluster_offset,
            cluster_radius,
            ring_radius,
        );
        s.validate()?;
        Ok(s)
    }
}
