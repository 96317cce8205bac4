//! Conversion of third-party conversation datasets into [`UnifiedRecord`]s.
//!
//! Each source is bound to an adapter family with its own field-mapping
//! config. Rows are converted independently; the [`Merger`] then drops
//! repeated conversation ids (first one wins) and keeps the statistics.
//!
//! Families:
//! * pairwise preference transcripts (`chosen` / `rejected`, HH-RLHF style),
//! * arena battles (two model conversations plus a winner),
//! * survey conversations (turn lists with scores and demographics, also
//!   used for plain turn-list datasets),
//! * plugin-native lines already in the release format.

mod arena;
mod fields;
mod pairwise;
mod plugin;
mod survey;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::model::{validate_record, UnifiedRecord};

pub use arena::{adapt_arena_pairs, ArenaConfig};
pub use pairwise::{adapt_pairwise_preference, split_transcript, PairwiseConfig};
pub use plugin::adapt_plugin_native;
pub use survey::{adapt_survey_conversations, SurveyConfig};

/// Adapter family plus its mapping table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum AdapterConfig {
    PairwisePreference(PairwiseConfig),
    ArenaPairs(ArenaConfig),
    SurveyConversations(SurveyConfig),
    PluginNative,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SourceAdapter {
    /// Becomes the `source` field of every record.
    pub source_name: String,
    #[serde(default)]
    pub input_format: String,
    #[serde(default)]
    pub license_note: String,
    /// Gated sources need explicit acknowledgement of their terms.
    #[serde(default)]
    pub gated: bool,
    pub config: AdapterConfig,
}

/// Why a row produced no records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkipEntry {
    pub source: String,
    pub row: usize,
    pub reason: String,
}

/// Result of converting one input row.
#[derive(Clone, Debug, PartialEq)]
pub enum RowOutcome {
    Converted(Vec<UnifiedRecord>),
    Skipped { reason: String, violations: usize },
}

impl SourceAdapter {
    pub fn new(source_name: impl Into<String>, config: AdapterConfig) -> Self {
        SourceAdapter {
            source_name: source_name.into(),
            input_format: String::new(),
            license_note: String::new(),
            gated: false,
            config,
        }
    }

    /// Converts one JSON line. `row` is the 1-based line number and names
    /// the row when the data has no id of its own.
    pub fn adapt_line(&self, row: usize, line: &str) -> RowOutcome {
        let source = self.source_name.as_str();
        let converted = match &self.config {
            AdapterConfig::PluginNative => plugin::adapt_line(line),
            other => match serde_json::from_str::<serde_json::Value>(line) {
                Ok(serde_json::Value::Object(obj)) => match other {
                    AdapterConfig::PairwisePreference(c) => pairwise::adapt_row(c, source, row, &obj),
                    AdapterConfig::ArenaPairs(c) => arena::adapt_row(c, source, row, &obj),
                    AdapterConfig::SurveyConversations(c) => survey::adapt_row(c, source, row, &obj),
                    AdapterConfig::PluginNative => unreachable!(),
                },
                Ok(_) => Err("row is not a JSON object".to_string()),
                Err(e) => Err(format!("invalid JSON: {e}")),
            },
        };
        finish_row(converted)
    }
}

/// Validates converted records; any violation skips the whole row so that
/// pairs stay intact.
fn finish_row(converted: Result<Vec<UnifiedRecord>, String>) -> RowOutcome {
    match converted {
        Err(reason) => RowOutcome::Skipped { reason, violations: 1 },
        Ok(records) => {
            let reports: Vec<_> = records.iter().map(validate_record).filter(|r| !r.valid).collect();
            if reports.is_empty() {
                RowOutcome::Converted(records)
            } else {
                let violations = reports.iter().map(|r| r.violations.len()).sum();
                let reason = reports.iter().map(|r| r.summary()).collect::<Vec<_>>().join("; ");
                RowOutcome::Skipped { reason, violations }
            }
        }
    }
}

fn check(converted: Result<Vec<UnifiedRecord>, String>) -> Result<Vec<UnifiedRecord>, String> {
    match finish_row(converted) {
        RowOutcome::Converted(records) => Ok(records),
        RowOutcome::Skipped { reason, .. } => Err(reason),
    }
}

fn collect_rows<'a, F>(
    rows: impl IntoIterator<Item = &'a serde_json::Map<String, serde_json::Value>>,
    mut adapt: F,
) -> (Vec<UnifiedRecord>, Vec<(usize, String)>)
where
    F: FnMut(usize, &'a serde_json::Map<String, serde_json::Value>) -> Result<Vec<UnifiedRecord>, String>,
{
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (i, row) in rows.into_iter().enumerate() {
        match check(adapt(i + 1, row)) {
            Ok(mut r) => records.append(&mut r),
            Err(reason) => skipped.push((i + 1, reason)),
        }
    }
    (records, skipped)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UnifyError {
    #[error("no adapter registered for source {0:?}")]
    MissingAdapter(String),
    #[error("source {0:?} is gated: review its terms of use, then pass --acknowledge-gated {0}")]
    GatedNotAcknowledged(String),
    #[error("source {0:?} is registered twice")]
    DuplicateSource(String),
}

/// Known sources by name.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Registry {
    adapters: BTreeMap<String, SourceAdapter>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// The bundled sources: `hh_rlhf`, `chatbot_arena`, `prism`, `wildchat`
    /// and `sharelm_plugin`.
    pub fn builtin() -> Self {
        let mut registry = Registry::new();
        let entries = [
            SourceAdapter {
                source_name: "hh_rlhf".into(),
                input_format: "JSON Lines with chosen/rejected transcripts".into(),
                license_note: "see the dataset card for license and citation".into(),
                gated: false,
                config: AdapterConfig::PairwisePreference(PairwiseConfig::default()),
            },
            SourceAdapter {
                source_name: "chatbot_arena".into(),
                input_format: "JSON Lines of battles with conversation_a/conversation_b".into(),
                license_note: "gated dataset: accept its terms of use before downloading".into(),
                gated: true,
                config: AdapterConfig::ArenaPairs(ArenaConfig::default()),
            },
            SourceAdapter {
                source_name: "prism".into(),
                input_format: "JSON Lines of conversations with per-turn scores and demographics".into(),
                license_note: "see the dataset card for license and citation".into(),
                gated: false,
                config: AdapterConfig::SurveyConversations(SurveyConfig::default()),
            },
            SourceAdapter {
                source_name: "wildchat".into(),
                input_format: "JSON Lines of conversations (conversation_hash, model, conversation)".into(),
                license_note: "gated dataset: accept its terms of use before downloading".into(),
                gated: true,
                config: AdapterConfig::SurveyConversations(SurveyConfig::turn_list(
                    "conversation_hash",
                    "model",
                    "conversation",
                )),
            },
            SourceAdapter {
                source_name: crate::PLUGIN_SOURCE.into(),
                input_format: "release JSON Lines".into(),
                license_note: "collected by the plugin".into(),
                gated: false,
                config: AdapterConfig::PluginNative,
            },
        ];
        for adapter in entries {
            registry.register(adapter).expect("builtin names are unique");
        }
        registry
    }

    pub fn register(&mut self, adapter: SourceAdapter) -> Result<(), UnifyError> {
        if self.adapters.contains_key(&adapter.source_name) {
            return Err(UnifyError::DuplicateSource(adapter.source_name));
        }
        self.adapters.insert(adapter.source_name.clone(), adapter);
        Ok(())
    }

    /// Adds or replaces a source definition.
    pub fn upsert(&mut self, adapter: SourceAdapter) {
        self.adapters.insert(adapter.source_name.clone(), adapter);
    }

    pub fn get(&self, name: &str) -> Option<&SourceAdapter> {
        self.adapters.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.adapters.keys().map(String::as_str)
    }

    /// Looks up a source, refusing gated ones that were not acknowledged.
    pub fn resolve(&self, name: &str, acknowledged: &[String]) -> Result<&SourceAdapter, UnifyError> {
        let adapter = self.get(name).ok_or_else(|| UnifyError::MissingAdapter(name.into()))?;
        if adapter.gated && !acknowledged.iter().any(|a| a == name) {
            return Err(UnifyError::GatedNotAcknowledged(name.into()));
        }
        Ok(adapter)
    }
}

/// Per-source counters. `read = converted + skipped` counts rows; `records`
/// counts what the converted rows produced before deduplication.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceReport {
    pub read: u64,
    pub converted: u64,
    pub skipped: u64,
    pub violation_count: u64,
    pub records: u64,
    pub duplicates: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnifyReport {
    pub per_source: BTreeMap<String, SourceReport>,
    pub total_records: u64,
    pub distinct_models: u64,
    pub duplicate_ids: Vec<String>,
    pub skipped_rows: Vec<SkipEntry>,
}

/// Single ordered consumer of adapter output: counts rows, drops repeated
/// conversation ids and tracks distinct model names.
#[derive(Debug, Default)]
pub struct Merger {
    seen: BTreeSet<String>,
    models: BTreeSet<String>,
    report: UnifyReport,
}

impl Merger {
    pub fn new() -> Self {
        Self::default()
    }

    /// Accounts for one row and returns the records to emit, in order.
    pub fn accept_row(&mut self, source: &str, row: usize, outcome: RowOutcome) -> Vec<UnifiedRecord> {
        let stats = self.report.per_source.entry(source.into()).or_default();
        stats.read += 1;
        match outcome {
            RowOutcome::Skipped { reason, violations } => {
                stats.skipped += 1;
                stats.violation_count += violations as u64;
                self.report.skipped_rows.push(SkipEntry { source: source.into(), row, reason });
                Vec::new()
            }
            RowOutcome::Converted(records) => {
                stats.converted += 1;
                stats.records += records.len() as u64;
                let mut fresh = Vec::with_capacity(records.len());
                for record in records {
                    if self.seen.insert(record.conversation_id.clone()) {
                        if let Some(model) = &record.model_name {
                            self.models.insert(model.clone());
                        }
                        self.report.total_records += 1;
                        fresh.push(record);
                    } else {
                        stats.duplicates += 1;
                        self.report.duplicate_ids.push(record.conversation_id);
                    }
                }
                fresh
            }
        }
    }

    /// Registers a source that may turn out to have no rows.
    pub fn touch_source(&mut self, source: &str) {
        self.report.per_source.entry(source.into()).or_default();
    }

    pub fn finish(mut self) -> UnifyReport {
        self.report.distinct_models = self.models.len() as u64;
        self.report
    }
}

/// Unifies in-memory inputs given as `(source name, JSON lines)`.
pub fn unify<'a, I, L>(
    registry: &Registry,
    inputs: I,
    acknowledged: &[String],
) -> Result<(Vec<UnifiedRecord>, UnifyReport), UnifyError>
where
    I: IntoIterator<Item = (&'a str, L)>,
    L: IntoIterator<Item = &'a str>,
{
    let inputs: Vec<(&SourceAdapter, L)> = inputs
        .into_iter()
        .map(|(name, lines)| registry.resolve(name, acknowledged).map(|a| (a, lines)))
        .collect::<Result<_, _>>()?;
    let mut merger = Merger::new();
    let mut out = Vec::new();
    for (adapter, lines) in inputs {
        merger.touch_source(&adapter.source_name);
        for (i, line) in lines.into_iter().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let outcome = adapter.adapt_line(i + 1, line);
            out.extend(merger.accept_row(&adapter.source_name, i + 1, outcome));
        }
    }
    Ok((out, merger.finish()))
}
