//! Std companion to `ptsga-core`: run configuration, verification reports,
//! result tables and their JSON/CSV serialization.

pub mod config;
mod error;
pub mod output;
pub mod report;
pub mod tables;

pub use config::{ModelSpec, OutputFormat, RunConfig, Tolerances};
pub use error::{CliError, EXIT_IO, EXIT_OK, EXIT_RELATION_FAILED, EXIT_USAGE};
pub use report::{verify, Relation, VerificationReport};
