use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use chesstab::cli::{run, RunConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let status = match run(&config, &mut out) {
        Ok(status) => status.code(),
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_USAGE
        }
    };
    let _ = out.flush();
    ExitCode::from(status)
}
