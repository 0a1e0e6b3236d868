//! Command-line front end, file formats and the on-disk cache for
//! `scheme-forge-core`.

pub mod build;
pub mod cache;
pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod export;

pub use config::{Format, RunConfig};
pub use error::{ForgeError, Result};
