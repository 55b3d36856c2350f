//! Command-line front end: argument parsing, run manifests and report files.

pub mod commands;
pub mod manifest;

pub use commands::{run, run_bench, Cli};
pub use manifest::{ConfigFile, CorpusSource, OutputFormat, RunManifest};
