mod analyze;
mod args;
mod fusion;
mod report;
mod sakuma;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fischer_lab::catalog::{families, Descriptor};
use fischer_lab::{Error, ErrorKind};

use args::{CatalogCommand, Cli, Command};
use report::canonical_json;

const EXIT_VERDICT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Verdict | ErrorKind::Internal => EXIT_VERDICT,
        ErrorKind::Usage | ErrorKind::Io => EXIT_USAGE,
        ErrorKind::ResourceCap => EXIT_CAP,
    }
}

fn emit(text: &str) -> fischer_lab::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> fischer_lab::Result<u8> {
    match cli.command {
        Command::Catalog(CatalogCommand::List { json, all }) => {
            if json {
                let descriptors: Option<Vec<String>> =
                    all.then(|| Descriptor::all().iter().map(ToString::to_string).collect());
                let value = match descriptors {
                    Some(d) => serde_json::json!({ "families": families(), "descriptors": d }),
                    None => serde_json::to_value(families())?,
                };
                emit(&canonical_json(&value)?)?;
            } else {
                let mut s = String::new();
                for f in families() {
                    s += &format!("{:<14} {:<58} {}\n", f.name, f.syntax, f.ranges);
                }
                if all {
                    for d in Descriptor::all() {
                        s += &format!("{d}\n");
                    }
                }
                emit(&s)?;
            }
            Ok(0)
        }
        Command::Analyze(args) => {
            let report = analyze::run(&args)?;
            match args.json.as_deref() {
                Some(p) if p.as_os_str() == "-" => emit(&canonical_json(&report)?)?,
                Some(p) => {
                    std::fs::write(p, canonical_json(&report)?)?;
                    emit(&analyze::render_text(&report))?;
                }
                None => emit(&analyze::render_text(&report))?,
            }
            Ok(if report.any_failure() { EXIT_VERDICT } else { 0 })
        }
        Command::Fusion(args) => {
            let report = fusion::run(&args)?;
            if args.json {
                emit(&canonical_json(&report)?)?;
            } else {
                emit(&fusion::render_text(&report))?;
            }
            Ok(0)
        }
        Command::Sakuma(args) => {
            let report = sakuma::run(&args)?;
            if args.json {
                emit(&canonical_json(&report)?)?;
            } else {
                emit(&sakuma::render_text(&report))?;
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
