//! Front end for the `emptyconv` toolkit: file formats, subcommands and plots.

pub mod commands;
pub mod error;
pub mod formats;
pub mod plot;
