//! `crowdcheck` command-line interface.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 data error.
//! Errors are reported on stderr as a single tab-separated line:
//! `error<TAB>kind=<usage|data><TAB>message=<text>`.

mod args;
mod commands;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use crate::args::Cli;
use crate::commands::{run, CliError};

fn report(err: &CliError) {
    let message = err.message().replace(['\n', '\t'], " ");
    eprintln!("error\tkind={}\tmessage={message}", err.kind());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            report(&CliError::Usage(e.kind().to_string()));
            return ExitCode::from(1);
        }
    };
    match run(&cli.command) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            report(&e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
