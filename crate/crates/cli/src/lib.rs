//! Command-line front end for `fodepth`: subcommands over every module, a
//! registry of named seeded scenarios, and JSON/graph6 I/O.

pub mod args;
pub mod chain;
pub mod commands;
pub mod config;
pub mod input;
pub mod scenarios;

use thiserror::Error;

/// Everything a subcommand can fail with, mapped onto exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] fodepth::Error),
    #[error(transparent)]
    Config(#[from] config::ConfigError),
    #[error(transparent)]
    Scenario(#[from] scenarios::ScenarioError),
    #[error("{context}: {source}")]
    Io { context: String, source: std::io::Error },
}

/// Exit code: a scenario assertion failed.
pub const EXIT_ASSERTION: i32 = 1;
/// Exit code: bad arguments, malformed input or violated preconditions.
pub const EXIT_USAGE: i32 = 2;
/// Exit code: the request exceeds a resource limit.
pub const EXIT_RESOURCE: i32 = 3;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let resource = match self {
            CliError::Core(e) => e.is_resource(),
            CliError::Scenario(scenarios::ScenarioError::Core(e)) => e.is_resource(),
            _ => false,
        };
        if resource {
            EXIT_RESOURCE
        } else {
            EXIT_USAGE
        }
    }
}
