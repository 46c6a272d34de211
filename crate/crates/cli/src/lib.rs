//! Command-line front end for `cmtrace`: input parsing, command dispatch and
//! report rendering.

pub mod parse;
pub mod run;

pub use parse::{parse_graph_spec, parse_ideal, parse_vars, ParseError};
pub use run::{dispatch, Cli, CliError, Command, Format, Outcome};
