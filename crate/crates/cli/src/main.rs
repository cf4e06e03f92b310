use std::process::ExitCode;

use burnside_cli::{execute, exit_code, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors count as malformed input; --help and --version succeed
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("burnside: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
