//! Library side of the `laplaceqm` command: configuration, CSV tables and the
//! subcommands. The binary only parses flags and picks an exit code.

pub mod commands;
pub mod config;
pub mod table;

pub use commands::{run, Failure};
pub use config::{Command, ConfigError, GridSpace, GridSpec, RunConfig};
pub use table::{sci, Table};
