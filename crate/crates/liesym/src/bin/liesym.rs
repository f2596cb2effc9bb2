use std::io::Read;
use std::process::ExitCode;

use clap::Parser;

use liesym::cli::{run, Cli};
use liesym::parse::parse_system;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let system = match &cli.system {
        Some(path) => {
            let text = if path == "-" {
                let mut buf = String::new();
                if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
                    eprintln!("error: cannot read stdin: {e}");
                    return ExitCode::from(2);
                }
                buf
            } else {
                match std::fs::read_to_string(path) {
                    Ok(t) => t,
                    Err(e) => {
                        eprintln!("error: cannot read '{path}': {e}");
                        return ExitCode::from(2);
                    }
                }
            };
            match parse_system(&text) {
                Ok(sys) => Some(sys),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
        }
        None => None,
    };
    match run(&cli.command, system.as_ref()) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).unwrap()
                );
            } else {
                print!("{}", report.to_text());
            }
            if report.valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
