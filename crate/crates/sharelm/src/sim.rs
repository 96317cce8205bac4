//! Scripted replay of a capture session: snapshots, UI commands and
//! scheduler ticks against an injected clock. Drives `capture-sim`.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sharelm_core::capture::{
    CaptureConfig, CaptureState, LocalStore, OutgoingBatch, Snapshot, StoreEvent, Turn,
};
use sharelm_core::model::Rating;
use sharelm_core::Timestamp;

fn yes() -> bool {
    true
}

/// One scripted action.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Step {
    AcceptTerms,
    SetDemographics {
        #[serde(default)]
        age: Option<u32>,
        #[serde(default)]
        country: Option<String>,
        #[serde(default)]
        gender: Option<String>,
    },
    Observe {
        url: String,
        turns: Vec<Turn>,
    },
    FinalizeIdle,
    RateConversation {
        conversation: String,
        rating: Rating,
    },
    RateResponse {
        conversation: String,
        index: usize,
        rating: Rating,
    },
    Delete {
        conversation: String,
    },
    SetSharing {
        enabled: bool,
    },
    /// Scheduler wake-up: finalize idle conversations, then upload what is
    /// due. `deliver = false` simulates a transport failure.
    Tick {
        #[serde(default = "yes")]
        deliver: bool,
    },
    PublishNow {
        #[serde(default = "yes")]
        deliver: bool,
    },
}

/// Conversations in steps are named by id, by `#n` (the n-th conversation
/// opened, from 0) or by `active`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Session {
    #[serde(default)]
    pub user_id: Option<String>,
    #[serde(default)]
    pub config: Option<CaptureConfig>,
    pub start: Timestamp,
    /// Whether terms start accepted, so short scripts need not say so.
    #[serde(default = "yes")]
    pub terms_accepted: bool,
    pub steps: Vec<Step>,
}

/// Moves the clock before step `before_step`: either to `at` or forward
/// by `advance_secs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClockEntry {
    pub before_step: usize,
    #[serde(default)]
    pub at: Option<Timestamp>,
    #[serde(default)]
    pub advance_secs: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BatchKind {
    Due,
    PublishNow,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub step: usize,
    pub now: Timestamp,
    pub input: Step,
    /// The conversation id a reference in `input` resolved to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub events: Vec<StoreEvent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub batch_kind: Option<BatchKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub batch: Option<OutgoingBatch>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub acknowledged: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reverted: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum SimError {
    #[error("clock entry for step {0} must set exactly one of at / advance_secs")]
    BadClockEntry(usize),
    #[error("clock would move backwards before step {0}")]
    ClockBackwards(usize),
}

pub struct Replay {
    pub trace: Vec<TraceEntry>,
    pub store: LocalStore,
    /// Ids in the order they were opened.
    pub opened: Vec<String>,
    /// Ids acknowledged by the server; the store forgets them.
    pub published: Vec<String>,
    /// Ids deleted by the user; tombstones are purged later.
    pub deleted: Vec<String>,
}

impl Replay {
    pub fn final_states(&self) -> BTreeMap<String, CaptureState> {
        let mut states: BTreeMap<_, _> =
            self.published.iter().map(|id| (id.clone(), CaptureState::Published)).collect();
        states.extend(self.deleted.iter().map(|id| (id.clone(), CaptureState::Deleted)));
        states.extend(self.store.conversations.iter().map(|(id, c)| (id.clone(), c.state)));
        states
    }

    /// The trace as JSON Lines, ending with a `{"final": ...}` line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for entry in &self.trace {
            out.push_str(&serde_json::to_string(entry).expect("trace serializes"));
            out.push('\n');
        }
        let last = serde_json::json!({ "final": self.final_states() });
        out.push_str(&last.to_string());
        out.push('\n');
        out
    }
}

fn resolve(name: &str, store: &LocalStore, opened: &[String]) -> String {
    if name == "active" {
        return store.active_id().unwrap_or("").to_string();
    }
    if let Some(n) = name.strip_prefix('#').and_then(|n| n.parse::<usize>().ok()) {
        return opened.get(n).cloned().unwrap_or_else(|| name.to_string());
    }
    name.to_string()
}

/// Runs `session` with the given clock script. The seed only matters when
/// the session does not fix a user id.
pub fn replay(session: &Session, clock: &[ClockEntry], seed: u64) -> Result<Replay, SimError> {
    let mut moves: BTreeMap<usize, Vec<&ClockEntry>> = BTreeMap::new();
    for entry in clock {
        if entry.at.is_some() == entry.advance_secs.is_some() {
            return Err(SimError::BadClockEntry(entry.before_step));
        }
        moves.entry(entry.before_step).or_default().push(entry);
    }

    let mut now = session.start;
    let mut store = match &session.user_id {
        Some(id) => LocalStore::with_user_id(id.clone(), now),
        None => LocalStore::init(now, &mut ChaCha8Rng::seed_from_u64(seed)),
    };
    if let Some(config) = session.config {
        store = store.with_config(config);
    }
    if session.terms_accepted {
        store.accept_terms();
    }

    let mut opened = Vec::new();
    let mut published = Vec::new();
    let mut deleted = Vec::new();
    let mut trace = Vec::with_capacity(session.steps.len());
    for (i, step) in session.steps.iter().enumerate() {
        for entry in moves.get(&i).into_iter().flatten() {
            let next = match (entry.at, entry.advance_secs) {
                (Some(at), _) => at,
                (_, Some(secs)) => now.plus_seconds(secs),
                _ => unreachable!(),
            };
            if next < now {
                return Err(SimError::ClockBackwards(i));
            }
            now = next;
        }
        let mut entry = TraceEntry {
            step: i,
            now,
            input: step.clone(),
            target: None,
            events: Vec::new(),
            batch_kind: None,
            batch: None,
            acknowledged: Vec::new(),
            reverted: Vec::new(),
            error: None,
        };
        let result = match step {
            Step::AcceptTerms => {
                store.accept_terms();
                Ok(())
            }
            Step::SetDemographics { age, country, gender } => {
                store.set_demographics(*age, country.clone(), gender.clone());
                Ok(())
            }
            Step::Observe { url, turns } => {
                let mut snap = Snapshot::new(url.clone(), turns.clone());
                snap.observed_at = now.unix_seconds().max(0) as u64;
                store.observe(&snap, now).map(|events| entry.events = events)
            }
            Step::FinalizeIdle => {
                let threshold = store.config.idle_threshold_secs;
                entry.events = finalized(store.finalize_idle(now, threshold));
                Ok(())
            }
            Step::RateConversation { conversation, rating } => {
                let id = entry.target.insert(resolve(conversation, &store, &opened));
                store.rate_conversation(id, *rating)
            }
            Step::RateResponse { conversation, index, rating } => {
                let id = entry.target.insert(resolve(conversation, &store, &opened));
                store.rate_response(id, *index, *rating)
            }
            Step::Delete { conversation } => {
                let id = entry.target.insert(resolve(conversation, &store, &opened));
                store.delete_conversation(id).map(|()| deleted.push(id.clone()))
            }
            Step::SetSharing { enabled } => {
                entry.events = store.set_sharing(*enabled, now);
                Ok(())
            }
            Step::Tick { deliver } => {
                let threshold = store.config.idle_threshold_secs;
                entry.events = finalized(store.finalize_idle(now, threshold));
                let batch = store.collect_due_batch(now);
                settle(&mut store, &mut entry, batch, BatchKind::Due, *deliver);
                Ok(())
            }
            Step::PublishNow { deliver } => {
                let batch = store.publish_now(now);
                settle(&mut store, &mut entry, batch, BatchKind::PublishNow, *deliver);
                Ok(())
            }
        };
        if let Err(e) = result {
            entry.error = Some(e.to_string());
        }
        published.extend(entry.acknowledged.iter().cloned());
        for event in &entry.events {
            if let StoreEvent::Opened { id, .. } = event {
                opened.push(id.clone());
            }
        }
        trace.push(entry);
    }
    Ok(Replay { trace, store, opened, published, deleted })
}

fn finalized(ids: Vec<String>) -> Vec<StoreEvent> {
    ids.into_iter().map(|id| StoreEvent::Finalized { id }).collect()
}

fn settle(
    store: &mut LocalStore,
    entry: &mut TraceEntry,
    batch: OutgoingBatch,
    kind: BatchKind,
    deliver: bool,
) {
    if batch.is_empty() {
        return;
    }
    if deliver {
        entry.acknowledged = store.acknowledge(batch.batch_id);
    } else {
        entry.reverted = store.upload_failed(batch.batch_id);
    }
    entry.batch_kind = Some(kind);
    entry.batch = Some(batch);
}
