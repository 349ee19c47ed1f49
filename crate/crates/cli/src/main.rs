use std::process::ExitCode;

use clap::Parser;
use pachner::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("pachner: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
