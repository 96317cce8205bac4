//! Merges third-party conversation datasets into one JSON Lines file.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use sharelm::core::unifier::Registry;
use sharelm::unify_io::{load_adapter_config, parse_source_arg, run_unify};

#[derive(Parser)]
#[command(about = "Convert datasets into unified records")]
struct Args {
    /// Input as <name>:<path>; repeat for several. Order decides which
    /// duplicate wins.
    #[arg(long = "source", required_unless_present = "list", value_parser = parse_source_arg)]
    sources: Vec<(String, PathBuf)>,
    #[arg(long, required_unless_present = "list")]
    out: Option<PathBuf>,
    /// Confirms the terms of use of a gated source were accepted.
    #[arg(long = "acknowledge-gated")]
    acknowledged: Vec<String>,
    /// Where to write the JSON report.
    #[arg(long)]
    report: Option<PathBuf>,
    /// TOML/JSON file with extra or replacement source definitions.
    #[arg(long)]
    adapters: Option<PathBuf>,
    /// List known sources and exit.
    #[arg(long)]
    list: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut registry = Registry::builtin();
    if let Some(path) = &args.adapters {
        if let Err(e) = load_adapter_config(&mut registry, path) {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    if args.list {
        for name in registry.names() {
            let a = registry.get(name).expect("listed");
            println!("{name}\tgated={}\t{}", a.gated, a.input_format);
        }
        return ExitCode::SUCCESS;
    }
    let out = args.out.expect("clap requires --out without --list");
    match run_unify(&registry, &args.sources, &out, args.report.as_deref(), &args.acknowledged) {
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Ok(report) => {
            for (source, s) in &report.per_source {
                eprintln!(
                    "{source}: read {} converted {} skipped {} records {} duplicates {}",
                    s.read, s.converted, s.skipped, s.records, s.duplicates
                );
            }
            eprintln!("total {} records, {} distinct models", report.total_records, report.distinct_models);
            if report.total_records == 0 {
                eprintln!("error: no records converted");
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
