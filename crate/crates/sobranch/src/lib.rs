//! Command-line front end and file formats for `sobranch-core`.

pub mod cli;
pub mod config;
pub mod json;
pub mod parse;
pub mod render;
pub mod report;
