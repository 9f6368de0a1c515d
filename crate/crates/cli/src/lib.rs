//! Command-line front end: argument handling, commands and example replays.

pub mod args;
pub mod commands;
pub mod replay;

use std::io::Write;

use clap::Parser;
use thiserror::Error;

use args::{Cli, Command};
use commands::Output;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("no attempt succeeded within {0} attempts")]
    Exhausted(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Exhausted(_) => 3,
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Gb { file, ring, check_only } => commands::gb(file, ring, *check_only),
        Command::Divide { file, by, ring } => commands::divide_cmd(file, by, ring),
        Command::Resolve {
            file,
            ring,
            minimal,
            betti,
            max_length,
        } => commands::resolve(file, ring, *minimal, *betti, *max_length),
        Command::Hilbert {
            file,
            ring,
            function,
            polynomial,
        } => commands::hilbert(file, ring, function.clone(), *polynomial),
        Command::Curve { d, g, p, seed, attempts } => commands::curve(*d, *g, *p, *seed, *attempts),
        Command::Gorenstein { g, p, trials, seed } => commands::gorenstein(*g, *p, *trials, *seed),
        Command::Examples { id } => replay::examples(id),
    }
}

/// Parses `argv`, runs the command, writes its output and returns the exit
/// code.
pub fn run(argv: impl IntoIterator<Item = String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{rendered}") } else { write!(stderr, "{rendered}") };
            return code;
        }
    };
    let output = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    let json = serde_json::to_string_pretty(&output.json).expect("JSON values serialize") + "\n";
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &json) {
            let _ = writeln!(stderr, "error: {}: {e}", path.display());
            return 2;
        }
    }
    let _ = if cli.json { stdout.write_all(json.as_bytes()) } else { stdout.write_all(output.text.as_bytes()) };
    match output.failure {
        Some(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
        None => 0,
    }
}
