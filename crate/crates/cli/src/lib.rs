//! Workflows behind the `lingdist` command.
//!
//! Each workflow loads and validates its inputs, computes every artifact in
//! memory and only then returns; [`Artifacts::write_to`] puts them on disk.
//! A failed run therefore never leaves a partial output directory behind.

pub mod artifacts;
pub mod commands;
pub mod config;
pub mod error;
pub mod inputs;
pub mod plots;
pub mod table;

pub use artifacts::{Artifacts, Outcome};
pub use commands::{align, all_to_all, cluster, relationship, words_analyse, AlignRequest};
pub use config::RunConfig;
pub use error::{exit, CliError};

/// Runs a workflow and writes its artifacts under `cfg.out`.
pub fn run(
    cfg: &RunConfig,
    workflow: fn(&RunConfig) -> Result<Outcome, CliError>,
) -> Result<Outcome, CliError> {
    let outcome = workflow(cfg)?;
    outcome.artifacts.write_to(&cfg.out)?;
    Ok(outcome)
}
