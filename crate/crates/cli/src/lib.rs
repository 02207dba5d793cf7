//! Command-line front end: workspace documents and subcommand dispatch.

pub mod commands;
pub mod error;
pub mod format;
pub mod workspace;

pub use commands::{run, Cli, Command, Output};
pub use error::CliError;
pub use workspace::{Object, Workspace};
