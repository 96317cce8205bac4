use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{ConversationRepository, IngestError, StoredConversation, StoredStatus};
use crate::anonymizer::ANONYMIZER_VERSION;
use crate::model::{serialize_record, UnifiedRecord};
use crate::time::Timestamp;

/// Key used in `per_model_counts` for records without a model name.
pub const UNKNOWN_MODEL: &str = "unknown";

/// Which active conversations go into a release. Empty lists mean "any".
/// Dates compare against the record timestamp, or the receive time when the
/// record has none.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReleaseFilter {
    #[serde(default)]
    pub sources: Vec<String>,
    #[serde(default)]
    pub models: Vec<String>,
    #[serde(default)]
    pub since: Option<Timestamp>,
    #[serde(default)]
    pub until: Option<Timestamp>,
}

impl ReleaseFilter {
    fn matches(&self, row: &StoredConversation, record: &UnifiedRecord) -> bool {
        let when = record.timestamp.unwrap_or(row.received_at);
        (self.sources.is_empty() || self.sources.contains(&record.source))
            && (self.models.is_empty() || record.model_name.as_ref().is_some_and(|m| self.models.contains(m)))
            && self.since.is_none_or(|t| when >= t)
            && self.until.is_none_or(|t| when <= t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReleaseManifest {
    pub release_id: String,
    pub record_count: u64,
    pub per_source_counts: BTreeMap<String, u64>,
    pub per_model_counts: BTreeMap<String, u64>,
    pub anonymizer_version: String,
    pub created_at: Timestamp,
}

/// Release content ready to be written: one JSON line per record, ordered
/// by conversation id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StagedRelease {
    pub lines: Vec<String>,
    pub manifest: ReleaseManifest,
}

impl StagedRelease {
    /// `release-YYYYMMDD.jsonl`
    pub fn data_file_name(&self) -> String {
        format!("{}.jsonl", self.manifest.release_id)
    }

    /// `release-YYYYMMDD.manifest.json`
    pub fn manifest_file_name(&self) -> String {
        format!("{}.manifest.json", self.manifest.release_id)
    }

    /// The data file content; every line ends with a newline.
    pub fn data(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

/// Collects the active conversations matching `filter`. Quarantined and
/// removed rows are never included.
pub fn build_release<R: ConversationRepository + ?Sized>(
    repo: &R,
    filter: &ReleaseFilter,
    now: Timestamp,
) -> Result<StagedRelease, IngestError> {
    let rows = repo.with_status(StoredStatus::Active)?;
    let mut lines = Vec::new();
    let mut per_source_counts = BTreeMap::new();
    let mut per_model_counts = BTreeMap::new();
    for row in &rows {
        let Some(record) = &row.record else { continue };
        if !filter.matches(row, record) {
            continue;
        }
        // Stored records were validated on the way in.
        let Ok(line) = serialize_record(record) else { continue };
        lines.push(line);
        *per_source_counts.entry(record.source.clone()).or_insert(0) += 1;
        let model = record.model_name.clone().unwrap_or_else(|| UNKNOWN_MODEL.into());
        *per_model_counts.entry(model).or_insert(0) += 1;
    }
    Ok(StagedRelease {
        manifest: ReleaseManifest {
            release_id: format!("release-{}", now.compact_date()),
            record_count: lines.len() as u64,
            per_source_counts,
            per_model_counts,
            anonymizer_version: ANONYMIZER_VERSION.into(),
            created_at: now,
        },
        lines,
    })
}
