//! Library side of the `choosable` command-line tool: file formats and the
//! subcommand implementations, kept importable so the test suites can drive
//! them directly.

pub mod commands;
pub mod formats;
