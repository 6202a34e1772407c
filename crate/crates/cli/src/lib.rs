//! Command-line front end for `jwverma`: job configuration, the four
//! subcommands and the JSON result format.

pub mod commands;
pub mod config;
pub mod document;
pub mod error;

pub use config::{Check, JobConfig};
pub use document::ResultDocument;
pub use error::{CliError, Result};
