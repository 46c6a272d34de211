use std::io::{Read, Write};
use std::process::ExitCode;

use clap::Parser;
use cmtrace_cli::{dispatch, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    };
    let outcome = dispatch(&cli, stdin);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    if !outcome.stderr.is_empty() {
        let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    }
    ExitCode::from(outcome.code)
}
