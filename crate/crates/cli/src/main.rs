mod args;
mod commands;
mod output;

use std::io;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use diamlab::ErrorClass;

use args::{Cli, Command};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(diamlab::Error),
    Io(io::Error),
}

impl From<diamlab::Error> for CliError {
    fn from(e: diamlab::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(e) => match e.class() {
                ErrorClass::Domain => 3,
                ErrorClass::Resource => 4,
                ErrorClass::Internal => 1,
            },
            CliError::Io(_) => 1,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Lib(e) => match e.class() {
                ErrorClass::Domain => "domain",
                ErrorClass::Resource => "resource",
                ErrorClass::Internal => "internal",
            },
            CliError::Io(_) => "io",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Lib(e) => e.to_string(),
            CliError::Io(e) => e.to_string(),
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (rows, out) = match &cli.command {
        Command::Bounds(a) => (commands::bounds(a)?, &a.output),
        Command::Sieve(a) => (commands::sieve(a)?, &a.output),
        Command::Exact(a) => (commands::exact(a)?, &a.output),
        Command::Simulate(a) => (commands::simulate(a)?, &a.output),
        Command::Sweep(a) => (commands::sweep(a)?, &a.output),
        Command::Threshold(a) => (commands::threshold(a)?, &a.output),
    };
    output::write_rows(&rows, out.format, out.output.as_deref())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            let first = first.trim_start_matches("error: ");
            eprintln!("error[usage]: {first}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {}", e.tag(), e.message().replace('\n', " "));
            ExitCode::from(e.exit_code())
        }
    }
}
