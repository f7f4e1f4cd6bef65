use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use distlat_cli::command::{run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).is_err() {
                return ExitCode::from(EXIT_INPUT);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("distlat: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
