//! Running a built-in experiment preset through the library API.
//!
//! cargo run --example run_preset -- regular-z /tmp/grwalk-regular-z

use grwalk::experiment::{self, presets};

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "kawada-ito-s3".to_string());
    let dir = args.next().unwrap_or_else(|| format!("out/{name}"));

    println!("available presets:");
    for p in presets::PRESETS {
        println!("  {:<24} {}", p.name, p.summary);
    }

    let config = match presets::load(&name) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    };
    match experiment::run_into(&config, dir.as_ref()) {
        Ok(outcome) => {
            for c in &outcome.report.checks {
                println!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
            }
            println!("artifacts in {}", outcome.output_dir.display());
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
