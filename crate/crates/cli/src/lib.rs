//! Command-line front end for `hyperzero`.
//!
//! Exit codes: 0 success, 1 invalid input, 2 parameters on a counting
//! boundary, 3 a prediction disagreed with the oracles.

pub mod args;
pub mod commands;
pub mod grid;
pub mod output;

use std::fmt;
use std::io::{self, Write};

use args::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BOUNDARY: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INVALID, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<hyperzero::Error> for CliError {
    fn from(e: hyperzero::Error) -> Self {
        let code = match e {
            hyperzero::Error::Boundary(_) => EXIT_BOUNDARY,
            hyperzero::Error::Inconsistent(_) => EXIT_MISMATCH,
            _ => EXIT_INVALID,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::invalid(e.to_string())
    }
}

/// Runs one parsed command, writing its output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Classify(a) => commands::classify(a, out),
        Command::Roots(a) => commands::roots(a, out),
        Command::Verify(a) => commands::verify(a, out),
        Command::Sweep(a) => commands::sweep(a, out),
        Command::Identity(a) => commands::identity(a, out),
    }
}
