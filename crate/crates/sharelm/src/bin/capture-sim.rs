//! Replays a scripted capture session and writes its event/batch trace.

use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Parser;
use sharelm::fsio::{save_store, write_atomic};
use sharelm::sim::{replay, ClockEntry, Session};

#[derive(Parser)]
#[command(about = "Replay a scripted capture session against a scripted clock")]
struct Args {
    /// Session JSON: start time, optional user id/config, and steps.
    #[arg(long)]
    session: PathBuf,
    /// JSON list of clock moves ({"before_step", "at" | "advance_secs"}).
    #[arg(long)]
    clock_script: Option<PathBuf>,
    /// Where to write the JSON Lines trace; `-` for stdout.
    #[arg(long, default_value = "-")]
    emit_trace: String,
    /// Seeds the user id when the session does not fix one.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also save the final local store here.
    #[arg(long)]
    store: Option<PathBuf>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T> {
    let text = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_slice(&text).with_context(|| format!("parsing {}", path.display()))
}

fn main() -> Result<()> {
    let args = Args::parse();
    let session: Session = read_json(&args.session)?;
    let clock: Vec<ClockEntry> = match &args.clock_script {
        Some(p) => read_json(p)?,
        None => Vec::new(),
    };
    let result = replay(&session, &clock, args.seed)?;
    let trace = result.to_jsonl();
    if args.emit_trace == "-" {
        print!("{trace}");
    } else {
        write_atomic(args.emit_trace.as_ref(), trace.as_bytes())
            .with_context(|| format!("writing {}", args.emit_trace))?;
    }
    if let Some(path) = &args.store {
        save_store(path, &result.store)?;
    }
    Ok(())
}
