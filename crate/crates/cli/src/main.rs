mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("verification failed: {0}")]
    Verification(String),
    /// Results were computed but some routes or identities disagree.
    #[error("routes disagree")]
    Disagreement { output: String, cells: Vec<String> },
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("could not format output: {0}")]
    Output(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::Output(_) => 1,
            CliError::Verification(_) | CliError::Disagreement { .. } => 2,
            CliError::ResourceCap(_) => 3,
        }
    }
}

impl From<plethy_core::Error> for CliError {
    fn from(e: plethy_core::Error) -> Self {
        match e {
            plethy_core::Error::NonIntegral { .. } | plethy_core::Error::Negative { .. } => {
                CliError::Verification(e.to_string())
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Restrict(a) => commands::restrict(a, &cli.caps),
        Command::Vecpart(a) => commands::vecpart(a, &cli.caps),
        Command::Plethysm(a) => commands::plethysm(a, &cli.caps),
        Command::ChInd(a) => commands::ch_ind(a, &cli.caps),
        Command::Verify(a) => commands::verify(a, &cli.caps),
    }
}

fn emit(text: &str) {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    // a closed pipe is not an error worth reporting
    let _ = lock.write_all(text.as_bytes());
    let _ = lock.flush();
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Disagreement { output, cells } = &e {
                emit(output);
                for cell in cells {
                    eprintln!("disagreement: {cell}");
                }
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
