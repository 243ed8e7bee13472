//! IO companion to `cdg-core`: the text graph format, DOT emission, the
//! knowledge-base file format, JSON report serialization, and the CLI.

pub mod cli;
pub mod dot;
pub mod format;
pub mod json;
pub mod kbfile;

pub use cdg_core as core;
