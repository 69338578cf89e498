//! Library half of the `syzygy` command-line tool: the ideal file format,
//! JSON report types and the subcommand implementations.

pub mod commands;
pub mod ideal_file;
pub mod report;
