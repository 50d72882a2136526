use std::io::Write;
use std::process;

use clap::error::ErrorKind;
use clap::Parser;

use citeweight_cli::{execute, Cli, CliError, ExitCode, RunConfig};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            process::exit(ExitCode::Success as i32);
        }
        Err(e) => {
            let text = e.to_string();
            let summary: Vec<&str> = text
                .lines()
                .map(str::trim)
                .take_while(|l| !l.is_empty() && !l.starts_with("Usage:"))
                .collect();
            let message = summary.join(" ");
            eprintln!("{}", CliError::usage(message.trim_start_matches("error: ")));
            process::exit(ExitCode::Usage as i32);
        }
    };

    let result = RunConfig::from_cli(&cli).and_then(|config| execute(&config));
    match result {
        Ok(Some(text)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                process::exit(ExitCode::Data as i32);
            }
        }
        Ok(None) => {}
        Err(e) => {
            eprintln!("{e}");
            process::exit(e.code as i32);
        }
    }
}
