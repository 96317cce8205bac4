//! Embedded relational store for the ingestion service.

use std::path::Path;

use rusqlite::{params, Connection, OptionalExtension};
use sharelm_core::ingest::{
    ConversationRepository, RequestTicket, StoreError, StoredConversation, StoredStatus,
};
use sharelm_core::model::{parse_record, serialize_record};
use sharelm_core::Timestamp;

const SCHEMA: &str = "
CREATE TABLE IF NOT EXISTS conversations (
    conversation_id TEXT PRIMARY KEY,
    record          TEXT,
    user_id         TEXT,
    received_at     INTEGER NOT NULL,
    status          TEXT NOT NULL
);
CREATE INDEX IF NOT EXISTS conversations_user ON conversations (user_id);
CREATE INDEX IF NOT EXISTS conversations_status ON conversations (status);
CREATE TABLE IF NOT EXISTS removal_requests (
    request_id TEXT PRIMARY KEY,
    ticket     TEXT NOT NULL
);
";

pub struct SqliteRepository {
    conn: Connection,
    available: bool,
}

fn unavailable(e: rusqlite::Error) -> StoreError {
    StoreError::Unavailable(e.to_string())
}

fn status_text(status: StoredStatus) -> &'static str {
    match status {
        StoredStatus::Active => "active",
        StoredStatus::Quarantined => "quarantined",
        StoredStatus::Removed => "removed",
    }
}

fn status_from(text: &str) -> Result<StoredStatus, StoreError> {
    match text {
        "active" => Ok(StoredStatus::Active),
        "quarantined" => Ok(StoredStatus::Quarantined),
        "removed" => Ok(StoredStatus::Removed),
        other => Err(StoreError::Corrupt(format!("unknown status {other:?}"))),
    }
}

type RawRow = (String, Option<String>, i64, String);

fn decode(raw: RawRow) -> Result<StoredConversation, StoreError> {
    let (conversation_id, record, received_at, status) = raw;
    let record = record
        .map(|line| parse_record(line.as_bytes()))
        .transpose()
        .map_err(|e| StoreError::Corrupt(format!("{conversation_id}: {e}")))?;
    let received_at = Timestamp::from_unix_seconds(received_at)
        .ok_or_else(|| StoreError::Corrupt(format!("{conversation_id}: bad received_at")))?;
    Ok(StoredConversation { conversation_id, record, received_at, status: status_from(&status)? })
}

impl SqliteRepository {
    pub fn open(path: &Path) -> Result<Self, StoreError> {
        Self::init(Connection::open(path).map_err(unavailable)?)
    }

    pub fn in_memory() -> Result<Self, StoreError> {
        Self::init(Connection::open_in_memory().map_err(unavailable)?)
    }

    fn init(conn: Connection) -> Result<Self, StoreError> {
        conn.execute_batch("PRAGMA journal_mode = WAL; PRAGMA synchronous = NORMAL;").map_err(unavailable)?;
        conn.execute_batch(SCHEMA).map_err(unavailable)?;
        Ok(SqliteRepository { conn, available: true })
    }

    /// Simulates losing the database, for degraded-mode tests.
    pub fn set_available(&mut self, available: bool) {
        self.available = available;
    }

    fn check(&self) -> Result<(), StoreError> {
        if self.available {
            Ok(())
        } else {
            Err(StoreError::Unavailable("store marked unavailable".into()))
        }
    }

    pub fn record_ticket(&mut self, ticket: &RequestTicket) -> Result<(), StoreError> {
        self.check()?;
        let text = serde_json::to_string(ticket).expect("ticket serializes");
        self.conn
            .execute(
                "INSERT OR REPLACE INTO removal_requests (request_id, ticket) VALUES (?1, ?2)",
                params![ticket.request_id, text],
            )
            .map_err(unavailable)?;
        Ok(())
    }

    pub fn ticket(&self, request_id: &str) -> Result<Option<RequestTicket>, StoreError> {
        self.check()?;
        let text: Option<String> = self
            .conn
            .query_row("SELECT ticket FROM removal_requests WHERE request_id = ?1", [request_id], |r| {
                r.get(0)
            })
            .optional()
            .map_err(unavailable)?;
        text.map(|t| serde_json::from_str(&t).map_err(|e| StoreError::Corrupt(e.to_string()))).transpose()
    }
}

impl ConversationRepository for SqliteRepository {
    fn ping(&self) -> Result<(), StoreError> {
        self.check()?;
        self.conn.query_row("SELECT 1", [], |_| Ok(())).map_err(unavailable)
    }

    fn get(&self, id: &str) -> Result<Option<StoredConversation>, StoreError> {
        self.check()?;
        let raw: Option<RawRow> = self
            .conn
            .query_row(
                "SELECT conversation_id, record, received_at, status FROM conversations WHERE conversation_id = ?1",
                [id],
                |r| Ok((r.get(0)?, r.get(1)?, r.get(2)?, r.get(3)?)),
            )
            .optional()
            .map_err(unavailable)?;
        raw.map(decode).transpose()
    }

    fn insert_if_absent(&mut self, row: StoredConversation) -> Result<bool, StoreError> {
        self.check()?;
        let (line, user) = match &row.record {
            Some(record) => (
                Some(serialize_record(record).map_err(|e| StoreError::Corrupt(e.to_string()))?),
                record.user_id.clone(),
            ),
            None => (None, None),
        };
        let changed = self
            .conn
            .execute(
                "INSERT OR IGNORE INTO conversations (conversation_id, record, user_id, received_at, status)
                 VALUES (?1, ?2, ?3, ?4, ?5)",
                params![
                    row.conversation_id,
                    line,
                    user,
                    row.received_at.unix_seconds(),
                    status_text(row.status)
                ],
            )
            .map_err(unavailable)?;
        Ok(changed == 1)
    }

    fn set_status(&mut self, id: &str, status: StoredStatus) -> Result<bool, StoreError> {
        self.check()?;
        let sql = if status == StoredStatus::Removed {
            "UPDATE conversations SET status = ?2, record = NULL, user_id = NULL WHERE conversation_id = ?1"
        } else {
            "UPDATE conversations SET status = ?2 WHERE conversation_id = ?1"
        };
        let changed = self.conn.execute(sql, params![id, status_text(status)]).map_err(unavailable)?;
        Ok(changed == 1)
    }

    fn ids_for_user(&self, user_id: &str) -> Result<Vec<String>, StoreError> {
        self.check()?;
        let mut stmt = self
            .conn
            .prepare(
                "SELECT conversation_id FROM conversations
                 WHERE user_id = ?1 AND status != 'removed' ORDER BY conversation_id",
            )
            .map_err(unavailable)?;
        let ids = stmt
            .query_map([user_id], |r| r.get(0))
            .map_err(unavailable)?
            .collect::<Result<Vec<String>, _>>()
            .map_err(unavailable)?;
        Ok(ids)
    }

    fn with_status(&self, status: StoredStatus) -> Result<Vec<StoredConversation>, StoreError> {
        self.check()?;
        let mut stmt = self
            .conn
            .prepare(
                "SELECT conversation_id, record, received_at, status FROM conversations
                 WHERE status = ?1 ORDER BY conversation_id",
            )
            .map_err(unavailable)?;
        let raws = stmt
            .query_map([status_text(status)], |r| Ok((r.get(0)?, r.get(1)?, r.get(2)?, r.get(3)?)))
            .map_err(unavailable)?
            .collect::<Result<Vec<RawRow>, _>>()
            .map_err(unavailable)?;
        raws.into_iter().map(decode).collect()
    }

    fn count(&self) -> Result<usize, StoreError> {
        self.check()?;
        let n: i64 = self
            .conn
            .query_row("SELECT COUNT(*) FROM conversations", [], |r| r.get(0))
            .map_err(unavailable)?;
        Ok(n as usize)
    }
}
