//! Text formats, JSON and DOT reports, seeded corpora and the `distlat`
//! command line on top of the `distlat` library.

pub mod command;
pub mod corpus;
pub mod format;
pub mod parallel;
pub mod report;

pub use command::{run, Cli, Command, Outcome};
