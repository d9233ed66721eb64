//! Command-line front end: configuration, manifests and file formats.

pub mod cli;
pub mod commands;
pub mod manifest;
pub mod output;
pub mod settings;

pub use commands::{cmd_batch, cmd_run};
pub use manifest::RunManifest;
pub use settings::Settings;
