//! Command implementations and the HTTP service behind the `curvlab` binary.

pub mod commands;
pub mod service;
pub mod source;
