//! Command-line front end for `korolat-core`.
//!
//! [`run`] takes an argument vector and returns what the process should print
//! and its exit code, so the whole surface can be exercised in-process.

pub mod args;
pub mod budget;
pub mod commands;
pub mod error;
pub mod manifest;
pub mod output;
pub mod parallel;

use std::ffi::OsString;

use clap::Parser;
use korolat_core::Budget;

use crate::args::Cli;
use crate::manifest::RunManifest;
use crate::output::Format;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `argv` (program name first) and runs it with the budget from the
/// environment.
pub fn run<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Invocation { stdout: text, stderr: String::new(), code }
            } else {
                Invocation { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let budget = match budget::budget_from_env() {
        Ok(b) => b,
        Err(e) => return Invocation { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.code },
    };
    let args = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    run_cli(&cli, args, budget)
}

pub fn run_cli(cli: &Cli, argv: Vec<String>, budget: Budget) -> Invocation {
    let outcome = match commands::execute(&cli.command, budget) {
        Ok(o) => o,
        Err(e) => return Invocation { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.code },
    };
    let format = match (cli.json, cli.csv || cli.out.is_some()) {
        (true, _) => Format::Json,
        (false, true) => Format::Csv,
        (false, false) => Format::Auto,
    };
    let rendered = outcome.report.render(format);
    let mut stdout = String::new();
    let mut stderr: String = outcome.report.notes.iter().map(|n| format!("{n}\n")).collect();
    let mut code = 0;
    match &cli.out {
        None => stdout = rendered,
        Some(path) => {
            let manifest = RunManifest::new(
                outcome.report.table.command,
                argv,
                outcome.params.clone(),
                outcome.seed,
                &outcome.schema(),
                rendered.as_bytes(),
            );
            let written = std::fs::write(path, &rendered).and_then(|_| manifest.write(path));
            match written {
                Ok(m) => stderr.push_str(&format!("wrote {} and {}\n", path.display(), m.display())),
                Err(e) => {
                    stderr.push_str(&format!("error: {}: {e}\n", path.display()));
                    code = error::EXIT_INPUT;
                }
            }
        }
    }
    if let Some(f) = outcome.failure {
        stderr.push_str(&format!("error: {f}\n"));
        code = f.code;
    }
    Invocation { stdout, stderr, code }
}
