//! Library surface of the `cb-lab` command-line tool: document formats and
//! the command implementations, kept callable so the integration and
//! acceptance suites can drive them directly.

pub mod commands;
pub mod docs;
