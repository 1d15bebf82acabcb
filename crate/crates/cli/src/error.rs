use std::process::ExitCode;

use thiserror::Error;

/// Exit status of a command: 0 success or true, 1 property false, 2 usage
/// or input error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    False,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::False => 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid input: {0}")]
    Schema(String),
    #[error("n = {n} exceeds the limit {limit} for this command; pass --force to run anyway")]
    CostGuard { n: usize, limit: usize },
    #[error(transparent)]
    Core(#[from] zonoweave_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(2)
    }
}
