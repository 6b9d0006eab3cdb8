//! IO, file formats, and command implementations behind the
//! `splice-indices` binary. Kept as a library so the formats and command
//! plumbing are testable directly.

pub mod commands;
pub mod dist;
pub mod edgelist;
pub mod error;
pub mod graph6;
pub mod report;
