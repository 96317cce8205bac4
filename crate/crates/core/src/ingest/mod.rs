//! Server-side intake: upload batches, removal requests, operator review and
//! staged releases, over any [`ConversationRepository`].

mod memory;
mod release;
mod removal;
mod upload;

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::model::UnifiedRecord;
use crate::time::Timestamp;

pub use memory::MemoryRepository;
pub use release::{build_release, ReleaseFilter, ReleaseManifest, StagedRelease, UNKNOWN_MODEL};
pub use removal::{
    handle_removal_request, review_quarantined, RemovalKind, RemovalRequest, RemovalRequestBody,
    RemovalState, RequestTicket, ReviewDecision,
};
pub use upload::{decode_upload, handle_upload, IngestLimits, RawUploadBatch, Rejection, UploadAck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StoredStatus {
    Active,
    Quarantined,
    Removed,
}

/// One row of the durable store. `record` is `None` once removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoredConversation {
    pub conversation_id: String,
    pub record: Option<UnifiedRecord>,
    pub received_at: Timestamp,
    pub status: StoredStatus,
}

impl StoredConversation {
    pub fn owner(&self) -> Option<&str> {
        self.record.as_ref().and_then(|r| r.user_id.as_deref())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StoreError {
    #[error("store unavailable: {0}")]
    Unavailable(String),
    #[error("store data is corrupt: {0}")]
    Corrupt(String),
}

/// Durable conversation storage.
///
/// Implementations must make each call atomic per conversation id;
/// [`ConversationRepository::insert_if_absent`] is the only way rows are
/// created.
pub trait ConversationRepository {
    fn ping(&self) -> Result<(), StoreError>;

    fn get(&self, id: &str) -> Result<Option<StoredConversation>, StoreError>;

    /// Inserts unless a row with the same id exists. Returns whether it did.
    fn insert_if_absent(&mut self, row: StoredConversation) -> Result<bool, StoreError>;

    /// Sets the status of an existing row; `Removed` also erases the record.
    /// Returns false for unknown ids.
    fn set_status(&mut self, id: &str, status: StoredStatus) -> Result<bool, StoreError>;

    /// Ids of non-removed rows whose record belongs to `user_id`.
    fn ids_for_user(&self, user_id: &str) -> Result<Vec<String>, StoreError>;

    /// All rows with the given status, ordered by id.
    fn with_status(&self, status: StoredStatus) -> Result<Vec<StoredConversation>, StoreError>;

    /// Number of rows of any status.
    fn count(&self) -> Result<usize, StoreError>;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IngestError {
    #[error("malformed request: {0}")]
    Malformed(String),
    #[error("request too large: {0}")]
    TooLarge(String),
    #[error("operator token missing or wrong")]
    Unauthorized,
    #[error(transparent)]
    Store(#[from] StoreError),
}

impl IngestError {
    pub fn http_status(&self) -> u16 {
        match self {
            IngestError::Malformed(_) => 400,
            IngestError::Unauthorized => 401,
            IngestError::TooLarge(_) => 413,
            IngestError::Store(_) => 503,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HealthReport {
    pub status: String,
    pub store: String,
    pub record_count: Option<usize>,
    pub anonymizer_version: String,
}

impl HealthReport {
    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }
}

pub fn get_health<R: ConversationRepository + ?Sized>(repo: &R) -> HealthReport {
    let count = repo.ping().and_then(|_| repo.count());
    let (status, store, record_count) = match count {
        Ok(n) => ("ok", "connected", Some(n)),
        Err(_) => ("degraded", "unavailable", None),
    };
    HealthReport {
        status: status.into(),
        store: store.into(),
        record_count,
        anonymizer_version: crate::anonymizer::ANONYMIZER_VERSION.into(),
    }
}
