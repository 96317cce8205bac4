//! File-level driver for the dataset unifier.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::Deserialize;
use sharelm_core::model::serialize_record;
use sharelm_core::unifier::{Merger, Registry, RowOutcome, SourceAdapter, UnifyError, UnifyReport};

use crate::fsio::{write_atomic, AtomicFile};

#[derive(Debug, thiserror::Error)]
pub enum UnifyRunError {
    #[error(transparent)]
    Refused(#[from] UnifyError),
    #[error("cannot read {path}: {source}")]
    Input { path: String, source: io::Error },
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: io::Error },
    #[error("invalid adapter config {path}: {reason}")]
    Config { path: String, reason: String },
}

/// Extra or replacement source definitions, e.g.
///
/// ```toml
/// [[source]]
/// source_name = "babi"
/// gated = false
/// config = { family = "pairwise_preference", chosen_field = "good" }
/// ```
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AdapterFile {
    #[serde(default)]
    source: Vec<SourceAdapter>,
}

/// Adds the definitions in a TOML (or `.json`) file to `registry`,
/// replacing built-ins with the same name.
pub fn load_adapter_config(registry: &mut Registry, path: &Path) -> Result<(), UnifyRunError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| UnifyRunError::Input { path: path.display().to_string(), source })?;
    let bad = |reason: String| UnifyRunError::Config { path: path.display().to_string(), reason };
    let file: AdapterFile = if path.extension().is_some_and(|e| e == "json") {
        serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?
    } else {
        toml::from_str(&text).map_err(|e| bad(e.to_string()))?
    };
    for adapter in file.source {
        registry.upsert(adapter);
    }
    Ok(())
}

/// Parses `name:path`.
pub fn parse_source_arg(arg: &str) -> Result<(String, PathBuf), String> {
    match arg.split_once(':') {
        Some((name, path)) if !name.is_empty() && !path.is_empty() => {
            Ok((name.to_string(), PathBuf::from(path)))
        }
        _ => Err(format!("expected <name>:<path>, got {arg:?}")),
    }
}

/// Converts every input in order, writes the merged JSON Lines to `out`
/// (atomically) and the report to `report_path` if given.
///
/// All sources are resolved before any file is read, so a refused gated
/// source never leaves partial output.
pub fn run_unify(
    registry: &Registry,
    inputs: &[(String, PathBuf)],
    out: &Path,
    report_path: Option<&Path>,
    acknowledged: &[String],
) -> Result<UnifyReport, UnifyRunError> {
    let resolved: Vec<(&SourceAdapter, &Path)> = inputs
        .iter()
        .map(|(name, path)| registry.resolve(name, acknowledged).map(|a| (a, path.as_path())))
        .collect::<Result<_, _>>()?;

    let out_err = |source| UnifyRunError::Output { path: out.display().to_string(), source };
    let mut writer = io::BufWriter::new(AtomicFile::create(out).map_err(out_err)?);
    let mut merger = Merger::new();
    for (adapter, path) in resolved {
        let in_err = |source| UnifyRunError::Input { path: path.display().to_string(), source };
        let mut reader = BufReader::new(File::open(path).map_err(in_err)?);
        merger.touch_source(&adapter.source_name);
        let mut buf = Vec::new();
        let mut row = 0usize;
        loop {
            buf.clear();
            if reader.read_until(b'\n', &mut buf).map_err(in_err)? == 0 {
                break;
            }
            row += 1;
            let outcome = match std::str::from_utf8(&buf) {
                Ok(line) if line.trim().is_empty() => continue,
                Ok(line) => adapter.adapt_line(row, line.trim_end_matches(['\n', '\r'])),
                Err(_) => RowOutcome::Skipped { reason: "line is not valid UTF-8".into(), violations: 1 },
            };
            for record in merger.accept_row(&adapter.source_name, row, outcome) {
                let line = serialize_record(&record).expect("adapter output was validated");
                writer.write_all(line.as_bytes()).map_err(out_err)?;
                writer.write_all(b"\n").map_err(out_err)?;
            }
        }
    }
    let report = merger.finish();
    let file = writer.into_inner().map_err(|e| out_err(e.into_error()))?;
    file.commit().map_err(out_err)?;
    if let Some(report_path) = report_path {
        let text = serde_json::to_vec_pretty(&report).expect("report serializes");
        write_atomic(report_path, &text)
            .map_err(|source| UnifyRunError::Output { path: report_path.display().to_string(), source })?;
    }
    Ok(report)
}
