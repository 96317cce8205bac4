use std::collections::BTreeMap;

use proptest::prelude::*;
use sharelm_core::capture::{CaptureState, LocalStore, OutgoingBatch, Snapshot, StoreEvent, Turn};
use sharelm_core::model::{validate_record, Role};
use sharelm_core::time::SECONDS_PER_DAY;
use sharelm_core::Timestamp;

const T0: i64 = 1_700_000_000;
const URL_A: &str = "https://huggingface.co/chat/conversation/a";
const URL_B: &str = "https://huggingface.co/chat/conversation/b";

fn ready() -> LocalStore {
    let mut store = LocalStore::with_user_id("u-1".into(), Timestamp::from_unix_seconds(T0).unwrap());
    store.accept_terms();
    store
}

fn turns(texts: &[String]) -> Vec<Turn> {
    texts
        .iter()
        .enumerate()
        .map(|(i, t)| Turn::new(if i % 2 == 0 { Role::User } else { Role::Model }, t.clone()))
        .collect()
}

#[derive(Debug, PartialEq, Clone, Copy)]
enum Class {
    New,
    Continue,
    Same,
}

/// Rebuild oracle: what the capture should be after seeing `snap`, knowing
/// only the previous capture and its URL.
fn oracle(prev: &Option<(String, Vec<(Role, String)>)>, snap: &Snapshot) -> Class {
    let shown: Vec<(Role, String)> = snap.turns.iter().map(|t| (t.role, t.text.clone())).collect();
    match prev {
        None => Class::New,
        Some((_, captured)) if *captured == shown => Class::Same,
        Some((url, captured))
            if *url == snap.url && shown.len() > captured.len() && shown.starts_with(captured) =>
        {
            Class::Continue
        }
        Some(_) => Class::New,
    }
}

fn classify(events: &[StoreEvent]) -> Class {
    if events.iter().any(|e| matches!(e, StoreEvent::Opened { .. })) {
        Class::New
    } else if events.iter().any(|e| matches!(e, StoreEvent::Appended { .. })) {
        Class::Continue
    } else {
        Class::Same
    }
}

fn active_messages(store: &LocalStore) -> Vec<(Role, String)> {
    let id = store.active_id().expect("a conversation is active");
    store.get(id).unwrap().messages.iter().map(|m| (m.role, m.text.clone())).collect()
}

/// A session that only ever grows: each step shows a longer (or equal)
/// prefix of one transcript.
fn grow_only() -> impl Strategy<Value = (Vec<String>, Vec<usize>)> {
    prop::collection::vec("[a-z][a-z ]{0,11}", 1..15).prop_flat_map(|texts| {
        let n = texts.len();
        (Just(texts), prop::collection::vec(1..=n, 1..20)).prop_map(|(texts, mut cuts)| {
            cuts.sort_unstable();
            (texts, cuts)
        })
    })
}

#[derive(Clone, Debug)]
enum PageStep {
    Grow(usize),
    Reset,
    Edit(usize),
    SwitchUrl,
}

fn page_steps() -> impl Strategy<Value = Vec<PageStep>> {
    prop::collection::vec(
        prop_oneof![
            4 => (1usize..4).prop_map(PageStep::Grow),
            1 => Just(PageStep::Reset),
            1 => (0usize..6).prop_map(PageStep::Edit),
            1 => Just(PageStep::SwitchUrl),
        ],
        1..30,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn grow_only_replay_matches_final_snapshot((texts, cuts) in grow_only()) {
        let mut store = ready();
        for (i, &cut) in cuts.iter().enumerate() {
            let snap = Snapshot::new(URL_A, turns(&texts[..cut]));
            store.observe(&snap, Timestamp::from_unix_seconds(T0 + i as i64).unwrap()).unwrap();
        }
        let last = *cuts.last().unwrap();
        let expected: Vec<(Role, String)> = turns(&texts[..last]).into_iter().map(|t| (t.role, t.text)).collect();
        prop_assert_eq!(store.conversations.len(), 1);
        prop_assert_eq!(active_messages(&store), expected);
    }

    #[test]
    fn classification_agrees_with_rebuild_oracle(steps in page_steps()) {
        let mut store = ready();
        let mut counter = 0;
        let mut fresh = || { counter += 1; format!("t{counter}") };
        let mut page: Vec<String> = vec![fresh()];
        let mut url = URL_A;
        let mut prev: Option<(String, Vec<(Role, String)>)> = None;
        for (i, step) in steps.iter().enumerate() {
            match step {
                PageStep::Grow(k) => (0..*k).for_each(|_| page.push(fresh())),
                PageStep::Reset => page = vec![fresh()],
                PageStep::Edit(at) => {
                    let at = (*at).min(page.len());
                    page.truncate(at);
                    page.push(fresh());
                }
                PageStep::SwitchUrl => url = if url == URL_A { URL_B } else { URL_A },
            }
            let snap = Snapshot::new(url, turns(&page));
            let expected = oracle(&prev, &snap);
            let events = store.observe(&snap, Timestamp::from_unix_seconds(T0 + i as i64).unwrap()).unwrap();
            prop_assert_eq!(classify(&events), expected, "step {} {:?}", i, step);
            let shown: Vec<(Role, String)> = snap.turns.iter().map(|t| (t.role, t.text.clone())).collect();
            prop_assert_eq!(active_messages(&store), shown.clone());
            if expected != Class::Same {
                prev = Some((url.to_string(), shown));
            }
        }
    }
}

// Exhaustive short traces over a small command alphabet.

#[derive(Clone, Copy, Debug)]
enum Cmd {
    ObserveA1,
    ObserveA2,
    ObserveB,
    DeleteFirstLive,
    DayPassesTick,
    DayPassesTickFails,
    PublishNow,
    ToggleSharing,
    IdleFinalize,
}

const ALPHABET: [Cmd; 9] = [
    Cmd::ObserveA1,
    Cmd::ObserveA2,
    Cmd::ObserveB,
    Cmd::DeleteFirstLive,
    Cmd::DayPassesTick,
    Cmd::DayPassesTickFails,
    Cmd::PublishNow,
    Cmd::ToggleSharing,
    Cmd::IdleFinalize,
];

struct Outcome {
    batches: Vec<(bool, OutgoingBatch, Timestamp)>,
}

fn run_trace(cmds: &[Cmd]) -> Outcome {
    let mut store = ready();
    let mut now = T0;
    let mut batches = Vec::new();
    let mut sharing = true;
    // id -> number of batches sent before it was deleted
    let mut deleted: BTreeMap<String, usize> = BTreeMap::new();
    let mut prior: BTreeMap<String, CaptureState> = BTreeMap::new();
    let a1 = vec!["alpha".to_string()];
    let a2 = vec!["alpha".to_string(), "alpha reply".to_string()];
    let b = vec!["beta".to_string()];
    for cmd in cmds {
        now += 1;
        let ts = |s: i64| Timestamp::from_unix_seconds(s).unwrap();
        match cmd {
            Cmd::ObserveA1 => drop(store.observe(&Snapshot::new(URL_A, turns(&a1)), ts(now))),
            Cmd::ObserveA2 => drop(store.observe(&Snapshot::new(URL_A, turns(&a2)), ts(now))),
            Cmd::ObserveB => drop(store.observe(&Snapshot::new(URL_B, turns(&b)), ts(now))),
            Cmd::DeleteFirstLive => {
                let target = store.reviewable().first().map(|c| c.id.clone());
                if let Some(id) = target {
                    if store.delete_conversation(&id).is_ok() {
                        deleted.insert(id, batches.len());
                    }
                }
            }
            Cmd::DayPassesTick | Cmd::DayPassesTickFails => {
                now += SECONDS_PER_DAY;
                store.finalize_idle(ts(now), store.config.idle_threshold_secs);
                let batch = store.collect_due_batch(ts(now));
                if !batch.is_empty() {
                    if matches!(cmd, Cmd::DayPassesTick) {
                        store.acknowledge(batch.batch_id);
                    } else {
                        store.upload_failed(batch.batch_id);
                    }
                    batches.push((false, batch, ts(now)));
                }
            }
            Cmd::PublishNow => {
                let batch = store.publish_now(ts(now));
                if !batch.is_empty() {
                    store.acknowledge(batch.batch_id);
                    batches.push((true, batch, ts(now)));
                }
            }
            Cmd::ToggleSharing => {
                sharing = !sharing;
                store.set_sharing(sharing, ts(now));
            }
            Cmd::IdleFinalize => {
                now += 3_600;
                store.finalize_idle(ts(now), store.config.idle_threshold_secs);
            }
        }

        // Every surviving conversation moved along a declared edge.
        for (id, conv) in &store.conversations {
            if let Some(before) = prior.get(id) {
                assert!(
                    *before == conv.state || before.can_transition_to(conv.state),
                    "{cmds:?}: {id} went {before:?} -> {:?}",
                    conv.state
                );
            } else {
                assert_eq!(
                    conv.state,
                    CaptureState::Recording,
                    "{cmds:?}: new conversations start recording"
                );
            }
            assert!(conv.state != CaptureState::Published, "published conversations leave the store");
            if conv.state == CaptureState::Deleted {
                assert!(conv.messages.is_empty());
            }
        }
        prior = store.conversations.iter().map(|(id, c)| (id.clone(), c.state)).collect();

        // No deleted conversation is ever sent.
        for (id, &sent_before) in &deleted {
            for (_, batch, _) in &batches[sent_before..] {
                assert!(batch.conversation_ids().all(|c| c != id), "{cmds:?}: deleted {id} uploaded");
            }
        }
    }
    Outcome { batches }
}

#[test]
fn exhaustive_short_traces_respect_the_protocol() {
    let mut count = 0;
    for len in 1..=5usize {
        let total = ALPHABET.len().pow(len as u32);
        for mut code in 0..total {
            let mut cmds = Vec::with_capacity(len);
            for _ in 0..len {
                cmds.push(ALPHABET[code % ALPHABET.len()]);
                code /= ALPHABET.len();
            }
            let outcome = run_trace(&cmds);
            for (publish_now, batch, sent_at) in &outcome.batches {
                for record in &batch.batch.records {
                    assert!(validate_record(record).valid);
                    if !publish_now {
                        let created = record.timestamp.unwrap();
                        assert!(sent_at.seconds_since(created) >= SECONDS_PER_DAY, "{cmds:?}");
                    }
                }
            }
            count += 1;
        }
    }
    assert_eq!(count, (1..=5).map(|l| 9usize.pow(l)).sum::<usize>());
}
