//! File formats, experiment sweeps and the command-line front end for
//! `extremal-core`.

pub mod app;
pub mod config;
pub mod error;
pub mod formats;
pub mod report;
pub mod sweep;

pub use error::CliError;
