use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use fiberlab::cli::{execute, run_batch, Cli, Command};

fn render(pretty: bool, value: &serde_json::Value) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("envelope is valid JSON")
    } else {
        value.to_string()
    }
}

/// Prints one line to stdout; a closed pipe is a normal way to stop reading.
fn emit(text: &str) -> Result<(), ExitCode> {
    match writeln!(io::stdout().lock(), "{text}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Err(ExitCode::SUCCESS),
        Err(e) => {
            eprintln!("error: {e}");
            Err(ExitCode::from(1))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if matches!(cli.command, Command::Batch) {
        return match run_batch(io::stdin().lock(), io::stdout().lock()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        };
    }
    match execute(&cli.command) {
        Ok(out) => match emit(&render(cli.pretty, &out.envelope())) {
            Ok(()) => ExitCode::SUCCESS,
            Err(code) => code,
        },
        Err(e) => {
            let envelope = serde_json::json!({ "status": "error", "error": e.to_string() });
            if let Err(code) = emit(&render(cli.pretty, &envelope)) {
                return code;
            }
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
