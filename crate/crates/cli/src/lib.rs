//! Command implementations and the HTTP service behind the `strata` binary.
//!
//! Both front ends produce seed documents through [`commands`], so the same
//! job gives byte-identical JSON on the command line and over HTTP.

pub mod commands;
pub mod server;

pub use commands::{CommandError, Format};
