use proptest::prelude::*;
use sharelm_core::anonymizer::ANONYMIZER_VERSION_KEY;
use sharelm_core::ingest::{
    build_release, handle_upload, ConversationRepository, MemoryRepository, RawUploadBatch, ReleaseFilter,
    StoredStatus,
};
use sharelm_core::model::{messages_from_turns, Role, UnifiedRecord};
use sharelm_core::{Timestamp, PLUGIN_SOURCE};

const USER: &str = "5d1c0a9e-2b7f-4c3d-8e6a-1f2b3c4d5e6f";

fn record(n: u8) -> UnifiedRecord {
    let mut r = UnifiedRecord::new(
        format!("00000000-0000-4000-8000-0000000000{n:02x}"),
        PLUGIN_SOURCE,
        messages_from_turns([(Role::User, format!("question {n}").as_str()), (Role::Model, "answer")]),
    );
    r.user_id = Some(USER.into());
    r
}

fn batch(ids: &[u8]) -> RawUploadBatch {
    RawUploadBatch {
        records: ids.iter().map(|&n| serde_json::to_value(record(n)).unwrap()).collect(),
        user_id: USER.into(),
        profile_snapshot: Default::default(),
    }
}

fn snapshot(repo: &MemoryRepository) -> Vec<(String, Option<UnifiedRecord>, StoredStatus)> {
    let mut rows = repo.with_status(StoredStatus::Active).unwrap();
    rows.extend(repo.with_status(StoredStatus::Quarantined).unwrap());
    rows.into_iter().map(|r| (r.conversation_id, r.record, r.status)).collect()
}

proptest! {
    #[test]
    fn duplicates_do_not_change_the_final_store(
        batches in prop::collection::vec(prop::collection::vec(0u8..20, 1..8), 1..8)
    ) {
        let t = |i: usize| Timestamp::from_unix_seconds(1_700_000_000 + i as i64).unwrap();

        let mut replayed = MemoryRepository::new();
        for (i, ids) in batches.iter().enumerate() {
            handle_upload(&mut replayed, &batch(ids), t(i)).unwrap();
        }

        // Oracle: each id once, in first-seen order.
        let mut seen = std::collections::BTreeSet::new();
        let mut deduped = MemoryRepository::new();
        for (i, ids) in batches.iter().enumerate() {
            let fresh: Vec<u8> = ids.iter().copied().filter(|n| seen.insert(*n)).collect();
            if !fresh.is_empty() {
                handle_upload(&mut deduped, &batch(&fresh), t(i)).unwrap();
            }
        }

        prop_assert_eq!(snapshot(&replayed), snapshot(&deduped));
        prop_assert_eq!(replayed.count().unwrap(), seen.len());
        let release = build_release(&replayed, &ReleaseFilter::default(), t(99)).unwrap();
        prop_assert_eq!(release.manifest.record_count as usize, seen.len());
        for row in replayed.with_status(StoredStatus::Active).unwrap() {
            prop_assert!(row.record.unwrap().conversation_metadata.contains_key(ANONYMIZER_VERSION_KEY));
        }
    }
}
