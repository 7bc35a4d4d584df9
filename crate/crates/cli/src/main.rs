use arrtwist_cli::{args::Cli, run};
use clap::Parser;
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let job = Cli::parse().into_job();
    let outcome = run(&job);
    let text = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
    let _ = if outcome.exit_code == 0 {
        writeln!(std::io::stdout().lock(), "{text}")
    } else {
        writeln!(std::io::stderr().lock(), "{text}")
    };
    ExitCode::from(outcome.exit_code)
}
