use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{ConversationRepository, IngestError, StoredConversation, StoredStatus};
use crate::anonymizer::{scrub_record, ANONYMIZER_VERSION, ANONYMIZER_VERSION_KEY};
use crate::model::{validate_record, Metadata, UnifiedRecord};
use crate::time::Timestamp;
use crate::PLUGIN_SOURCE;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestLimits {
    pub max_records: usize,
    pub max_bytes: usize,
}

impl Default for IngestLimits {
    fn default() -> Self {
        IngestLimits { max_records: 1_000, max_bytes: 10 * 1024 * 1024 }
    }
}

/// An upload body whose records have not been schema-checked yet, so one
/// bad record does not sink the whole batch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawUploadBatch {
    pub records: Vec<serde_json::Value>,
    pub user_id: String,
    #[serde(default)]
    pub profile_snapshot: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    /// Position of the record in the batch.
    pub index: usize,
    pub conversation_id: Option<String>,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UploadAck {
    pub accepted: Vec<String>,
    pub rejected: Vec<Rejection>,
}

impl UploadAck {
    /// 200 when everything was accepted, 422 otherwise.
    pub fn http_status(&self) -> u16 {
        if self.rejected.is_empty() {
            200
        } else {
            422
        }
    }
}

/// Parses an upload body, enforcing the size limits.
pub fn decode_upload(body: &[u8], limits: &IngestLimits) -> Result<RawUploadBatch, IngestError> {
    if body.len() > limits.max_bytes {
        return Err(IngestError::TooLarge(format!(
            "body is {} bytes, limit is {}",
            body.len(),
            limits.max_bytes
        )));
    }
    let batch: RawUploadBatch =
        serde_json::from_slice(body).map_err(|e| IngestError::Malformed(e.to_string()))?;
    if batch.records.len() > limits.max_records {
        return Err(IngestError::TooLarge(format!(
            "batch has {} records, limit is {}",
            batch.records.len(),
            limits.max_records
        )));
    }
    if batch.user_id.trim().is_empty() {
        return Err(IngestError::Malformed("user_id is blank".into()));
    }
    Ok(batch)
}

fn check_record(value: &serde_json::Value, batch_user: &str) -> Result<UnifiedRecord, String> {
    let record: UnifiedRecord = serde_json::from_value(value.clone()).map_err(|e| format!("schema: {e}"))?;
    let report = validate_record(&record);
    if !report.valid {
        return Err(report.summary());
    }
    if record.source != PLUGIN_SOURCE {
        return Err(format!("source: expected {PLUGIN_SOURCE}"));
    }
    if record.user_id.as_deref() != Some(batch_user) {
        return Err("user_id: does not match the batch user_id".into());
    }
    Ok(record)
}

/// Scrubs and stores every acceptable record of a batch.
///
/// Records already stored (in any status) are acknowledged again without
/// being touched, so replays are harmless and removed content stays gone.
pub fn handle_upload<R: ConversationRepository + ?Sized>(
    repo: &mut R,
    batch: &RawUploadBatch,
    now: Timestamp,
) -> Result<UploadAck, IngestError> {
    repo.ping()?;
    let mut ack = UploadAck::default();
    for (index, value) in batch.records.iter().enumerate() {
        match check_record(value, &batch.user_id) {
            Ok(record) => {
                if repo.get(&record.conversation_id)?.is_none() {
                    let mut scrubbed = scrub_record(&record);
                    scrubbed
                        .conversation_metadata
                        .insert(ANONYMIZER_VERSION_KEY.into(), ANONYMIZER_VERSION.into());
                    repo.insert_if_absent(StoredConversation {
                        conversation_id: record.conversation_id.clone(),
                        record: Some(scrubbed),
                        received_at: now,
                        status: StoredStatus::Active,
                    })?;
                }
                ack.accepted.push(record.conversation_id);
            }
            Err(reason) => ack.rejected.push(Rejection {
                index,
                conversation_id: value
                    .get("conversation_id")
                    .and_then(|v| v.as_str())
                    .filter(|s| !s.is_empty())
                    .map(String::from),
                reason,
            }),
        }
    }
    Ok(ack)
}
