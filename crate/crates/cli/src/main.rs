use std::process::ExitCode;

use clap::Parser;
use moonshine_cli::{dispatch, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let report = dispatch(&config);
    let out = report.render(config.output_format());
    if report.exit_code == moonshine_cli::EXIT_USAGE && !config.json {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(report.exit_code)
}
