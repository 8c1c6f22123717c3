//! File formats, exporters, the shipped link table and the command-line
//! front end for `mcbq-core`.

pub mod cli;
pub mod export;
pub mod links;
pub mod mcb_file;
