use std::process::ExitCode;

use clap::{Parser, Subcommand};
use grwalk::experiment::{self, presets, ExperimentError};

/// Random walks on groups: reproducible experiment runner.
#[derive(Parser)]
#[command(name = "grwalk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a config file (or preset) and write its artifacts.
    Run { config: String },
    /// Run a preset (or config file) and compare against its pinned expectations.
    Check { preset: String },
    /// List the built-in presets.
    ListPresets,
    /// Print a preset's config text.
    Preset { name: String },
}

fn report(outcome: &experiment::RunOutcome) {
    for c in &outcome.report.checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        println!("{mark} {}: {}", c.name, c.detail);
    }
    println!("artifacts in {}", outcome.output_dir.display());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Run { config } => experiment::resolve(&config)
            .and_then(|c| experiment::run(&c))
            .map(|o| report(&o)),
        Command::Check { preset } => match experiment::resolve(&preset) {
            Ok(c) => match experiment::run(&c) {
                Ok(o) => {
                    report(&o);
                    let failures = o.report.failures();
                    if failures.is_empty() {
                        Ok(())
                    } else {
                        Err(ExperimentError::CheckFailed(failures))
                    }
                }
                Err(e) => Err(e),
            },
            Err(e) => Err(e),
        },
        Command::ListPresets => {
            for p in presets::PRESETS {
                println!("{:<24} {}", p.name, p.summary);
            }
            Ok(())
        }
        Command::Preset { name } => presets::find(&name)
            .map(|p| print!("{}", p.text))
            .ok_or_else(|| ExperimentError::Config(format!("unknown preset {name:?}"))),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("grwalk: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
