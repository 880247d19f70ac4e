//! Batch driver exposing dimension tables, theorem verification suites,
//! cohomology tables, series oracles and comparison reports.

mod commands;
mod opts;
mod output;

use clap::Parser;
use opts::Cli;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap reserves exit code 2 for usage errors; help/version are 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match commands::run(cli) {
        Ok(all_passed) => std::process::exit(if all_passed { 0 } else { 1 }),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
