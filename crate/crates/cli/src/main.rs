mod commands;
mod config;
mod error;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::config::{Cli, SweepConfig};
use crate::error::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = SweepConfig::resolve(cli)?;
    let table = commands::run(&cfg)?;
    match &cfg.output {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            table.write(&mut out, cfg.format)?;
            out.flush()?;
        }
        None => {
            let mut out = io::stdout().lock();
            table.write(&mut out, cfg.format)?;
            out.flush()?;
        }
    }
    if table.warnings > 0 {
        eprintln!("warning: {} of {} rows failed; see the status column", table.warnings, table.rows.len());
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
