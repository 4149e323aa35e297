//! File formats, reports and the `synchrony-lab` command-line front end.
//!
//! The library half exists so the formats can be tested without spawning the
//! binary. Everything here is deterministic: identical inputs produce
//! byte-identical output.

// `!(a <= b)` guards are deliberate: they reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod numfmt;
pub mod samples;
pub mod scenario;

pub use error::CliError;
