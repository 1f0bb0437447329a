//! Command implementations behind the `eislag` binary.

pub mod commands;
pub mod config;
pub mod output;
pub mod plot;
pub mod verify;
