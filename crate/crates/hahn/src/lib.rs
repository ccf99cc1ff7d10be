//! Parsing, reporting and the command-line front end for `hahn-core`.

pub mod cli;
pub mod derive;
pub mod error;
pub mod parse;
pub mod report;
pub mod sample;

pub use error::{Error, ParseError, Result};
pub use parse::{parse_element, parse_field, parse_group, parse_series, parse_series_in};
