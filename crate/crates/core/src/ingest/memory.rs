use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::{ConversationRepository, StoreError, StoredConversation, StoredStatus};

/// In-memory repository. Can be switched off to simulate an outage.
#[derive(Clone, Debug, Default)]
pub struct MemoryRepository {
    rows: BTreeMap<String, StoredConversation>,
    unavailable: bool,
}

impl MemoryRepository {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_available(&mut self, available: bool) {
        self.unavailable = !available;
    }

    fn check(&self) -> Result<(), StoreError> {
        if self.unavailable {
            Err(StoreError::Unavailable("memory store switched off".into()))
        } else {
            Ok(())
        }
    }
}

impl ConversationRepository for MemoryRepository {
    fn ping(&self) -> Result<(), StoreError> {
        self.check()
    }

    fn get(&self, id: &str) -> Result<Option<StoredConversation>, StoreError> {
        self.check()?;
        Ok(self.rows.get(id).cloned())
    }

    fn insert_if_absent(&mut self, row: StoredConversation) -> Result<bool, StoreError> {
        self.check()?;
        if self.rows.contains_key(&row.conversation_id) {
            return Ok(false);
        }
        self.rows.insert(row.conversation_id.clone(), row);
        Ok(true)
    }

    fn set_status(&mut self, id: &str, status: StoredStatus) -> Result<bool, StoreError> {
        self.check()?;
        let Some(row) = self.rows.get_mut(id) else { return Ok(false) };
        row.status = status;
        if status == StoredStatus::Removed {
            row.record = None;
        }
        Ok(true)
    }

    fn ids_for_user(&self, user_id: &str) -> Result<Vec<String>, StoreError> {
        self.check()?;
        Ok(self
            .rows
            .values()
            .filter(|r| r.status != StoredStatus::Removed && r.owner() == Some(user_id))
            .map(|r| r.conversation_id.clone())
            .collect())
    }

    fn with_status(&self, status: StoredStatus) -> Result<Vec<StoredConversation>, StoreError> {
        self.check()?;
        Ok(self.rows.values().filter(|r| r.status == status).cloned().collect())
    }

    fn count(&self) -> Result<usize, StoreError> {
        self.check()?;
        Ok(self.rows.len())
    }
}
