//! File formats, SVG rendering, DOT export, the theorem harness and the
//! command-line front end built on `zonoweave-core`.

pub mod commands;
pub mod dot;
pub mod error;
pub mod harness;
pub mod json;
pub mod svg;

pub use commands::{dispatch, run, Cli, Command, Outcome};
pub use error::{CliError, Status};
pub use harness::{TheoremId, TheoremReport};
