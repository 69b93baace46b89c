//! File formats, exports, reports and the command line for `codegree-core`.

pub mod cli;
pub mod export;
pub mod groupfile;
pub mod report;

pub use groupfile::{load_group, parse_group_file, LoadError, ParseError};
