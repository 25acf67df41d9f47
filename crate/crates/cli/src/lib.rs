//! Library side of the `simgreedy` command: config schema, CSV ingestion,
//! experiment sweeps and the verification subcommands.

pub mod commands;
pub mod config;
pub mod experiment;
pub mod ingest;
pub mod problem;

pub use config::ExperimentConfig;
pub use experiment::{run_experiment, write_report, Row, REPORT_HEADER};
