//! `hosq`: runs the numerical experiments and writes CSV.

mod args;
mod experiments;
mod output;
mod source;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};

fn run() -> Result<bool> {
    let cli = args::parse_args(std::env::args_os().collect())?;
    let table = experiments::run(&cli)?;
    match &cli.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
            table.write(&mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = io::stdout().lock();
            table.write(&mut w)?;
            w.flush()?;
        }
    }
    for w in &table.warnings {
        eprintln!("warning: {w}");
    }
    for f in &table.failures {
        eprintln!("error: {f}");
    }
    Ok(table.failures.is_empty())
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            if let Some(clap_error) = e.downcast_ref::<clap::Error>() {
                clap_error.exit();
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
