use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;
use listheap_bench::{render, run_dijkstra, run_measure, run_sort, run_trace, Cli, Command};

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sort(args) => {
            let report = run_sort(&args)?;
            emit(
                &render(&report, args.output.format)?,
                args.output.out.as_deref(),
            )
        }
        Command::Dijkstra(args) => {
            let outcome = run_dijkstra(&args)?;
            emit(
                &render(&outcome.report, args.output.format)?,
                args.output.out.as_deref(),
            )
        }
        Command::Measure(args) => emit(&run_measure(&args)?, args.output.out.as_deref()),
        Command::Trace(args) => {
            let mut text = run_trace(&args)?.join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            emit(&text, args.out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
