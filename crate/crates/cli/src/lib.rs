//! File format and subcommands behind the `connfactor` binary.

pub mod commands;
pub mod format;

pub use format::{parse_graph, parse_instance, serialize_instance, Instance, ParseError};
