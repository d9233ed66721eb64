use anyhow::Result;
use clap::Parser;
use shepherd_cli::cli::{Cli, Command};
use shepherd_cli::commands::{self, default_batch_out, default_run_out};

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run() -> Result<()> {
    match Cli::parse().command {
        Command::Run { overrides, out } => {
            let settings = overrides.resolve()?;
            let out = out.unwrap_or_else(default_run_out);
            let result = commands::cmd_run(&settings, &out)?;
            println!("{}", commands::summary_line(&result));
        }
        Command::Batch {
            overrides,
            out,
            no_plot_data,
            quiet,
        } => {
            let settings = overrides.resolve()?;
            let out = out.unwrap_or_else(default_batch_out);
            let rows = commands::cmd_batch(&settings, &out, !no_plot_data, |row| {
                if !quiet {
                    eprintln!(
                        "{:<8} {:<11} m={:<2} success={:.2} ct={:.1} apl={:.1}",
                        row.policy.as_str(),
                        row.placement.as_str(),
                        row.m,
                        row.metrics.success_rate,
                        row.metrics.completion_time.mean,
                        row.metrics.avg_path_length.mean,
                    );
                }
            })?;
            println!(
                "wrote {} rows to {}",
                rows.len(),
                out.join(commands::METRICS_FILE).display()
            );
        }
    }
    Ok(())
}
