//! Command-line harness around `bitableau-core`: single-graph commands,
//! greedy-versus-oracle hunts with JSON reports, and golden-case replay.

pub mod app;
pub mod commands;
pub mod error;
pub mod golden;
pub mod hunt;
pub mod input;
pub mod report;
