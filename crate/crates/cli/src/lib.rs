//! Command-line companion to `domstruct-core`: graph file formats, DOT
//! export, verification reports, and campaign orchestration.

pub mod campaign;
pub mod dot;
pub mod formats;
pub mod report;
