use sharelm::core::ingest::{
    ConversationRepository, MemoryRepository, StoreError, StoredConversation, StoredStatus,
};
use sharelm::core::model::{messages_from_turns, Role, UnifiedRecord};
use sharelm::core::Timestamp;
use sharelm::sqlite::SqliteRepository;

fn row(id: &str, user: &str) -> StoredConversation {
    let mut record = UnifiedRecord::new(id, "sharelm_plugin", messages_from_turns([(Role::User, "hi")]));
    record.user_id = Some(user.into());
    StoredConversation {
        conversation_id: id.into(),
        record: Some(record),
        received_at: Timestamp::from_unix_seconds(1_700_000_000).unwrap(),
        status: StoredStatus::Active,
    }
}

/// The contract every store must satisfy.
fn conformance(repo: &mut dyn ConversationRepository) {
    repo.ping().unwrap();
    assert!(repo.insert_if_absent(row("b", "u1")).unwrap());
    assert!(repo.insert_if_absent(row("a", "u1")).unwrap());
    assert!(repo.insert_if_absent(row("c", "u2")).unwrap());

    let mut changed = row("a", "u9");
    changed.received_at = Timestamp::from_unix_seconds(1).unwrap();
    assert!(!repo.insert_if_absent(changed).unwrap(), "first write wins");
    assert_eq!(repo.get("a").unwrap().unwrap(), row("a", "u1"));
    assert_eq!(repo.count().unwrap(), 3);
    assert_eq!(repo.ids_for_user("u1").unwrap(), vec!["a", "b"]);

    assert!(repo.set_status("c", StoredStatus::Quarantined).unwrap());
    let active: Vec<_> =
        repo.with_status(StoredStatus::Active).unwrap().into_iter().map(|r| r.conversation_id).collect();
    assert_eq!(active, vec!["a", "b"]);

    assert!(repo.set_status("a", StoredStatus::Removed).unwrap());
    let removed = repo.get("a").unwrap().unwrap();
    assert_eq!(removed.record, None);
    assert_eq!(removed.status, StoredStatus::Removed);
    assert_eq!(repo.ids_for_user("u1").unwrap(), vec!["b"]);
    assert!(!repo.insert_if_absent(row("a", "u1")).unwrap(), "removed ids stay removed");
    assert_eq!(repo.get("a").unwrap().unwrap().record, None);

    assert!(!repo.set_status("zzz", StoredStatus::Active).unwrap());
    assert_eq!(repo.get("zzz").unwrap(), None);
    assert_eq!(repo.count().unwrap(), 3);
}

#[test]
fn memory_repository_conforms() {
    conformance(&mut MemoryRepository::new());
}

#[test]
fn sqlite_repository_conforms() {
    conformance(&mut SqliteRepository::in_memory().unwrap());
}

#[test]
fn sqlite_survives_reopen() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("store.db");
    {
        let mut repo = SqliteRepository::open(&path).unwrap();
        repo.insert_if_absent(row("x", "u")).unwrap();
        repo.set_status("x", StoredStatus::Quarantined).unwrap();
    }
    let repo = SqliteRepository::open(&path).unwrap();
    let stored = repo.get("x").unwrap().unwrap();
    assert_eq!(stored.status, StoredStatus::Quarantined);
    assert_eq!(stored.record, row("x", "u").record);
}

#[test]
fn unavailable_store_reports_errors() {
    let mut repo = SqliteRepository::in_memory().unwrap();
    repo.set_available(false);
    assert!(matches!(repo.ping(), Err(StoreError::Unavailable(_))));
    assert!(matches!(repo.insert_if_absent(row("a", "u")), Err(StoreError::Unavailable(_))));
}
