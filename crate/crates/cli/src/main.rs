use std::process::ExitCode;

use clap::Parser;
use torus_jones_cli::{execute, Cli, Format};

fn main() -> ExitCode {
    // clap exits with 2 on malformed flags and 0 for --help
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match execute(&cli, &mut stdout) {
        Ok(record) => {
            let format = torus_jones_cli::commands::common(&cli.command).format;
            if format == Format::Csv {
                for w in &record.warnings {
                    eprintln!("warning: {w}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
