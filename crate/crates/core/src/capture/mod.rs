//! Client-side capture: turning page snapshots into conversations, the local
//! store lifecycle and the delayed upload.
//!
//! A conversation moves `recording → pending_upload → published`, or to
//! `deleted` from any state before publication. Uploading is two-phase: a
//! batch is handed out and its conversations are locked as in flight; they
//! leave the store on acknowledgement and become uploadable again if the
//! transport reports failure.
//!
//! Every operation takes the current time as an argument.

mod boundary;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand_core::RngCore;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::model::{ConversationFeedback, Message, Metadata, Rating, Role, UnifiedRecord, UserProfile};
use crate::time::{Timestamp, SECONDS_PER_DAY};
use crate::PLUGIN_SOURCE;

pub use boundary::{detect_boundary, Boundary, PrefixDigest, Snapshot, Turn};

/// Metadata key for the page URL a plugin conversation was captured from.
pub const URL_KEY: &str = "url";

/// Cap on remembered deleted-transcript fingerprints; oldest are dropped.
const MAX_SUPPRESSED: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaptureConfig {
    /// Minimum age before a conversation is uploaded.
    pub upload_delay_secs: i64,
    /// A recording conversation untouched for longer than this is finalized.
    pub idle_threshold_secs: i64,
}

impl Default for CaptureConfig {
    fn default() -> Self {
        CaptureConfig { upload_delay_secs: SECONDS_PER_DAY, idle_threshold_secs: 30 * 60 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaptureState {
    Recording,
    PendingUpload,
    Published,
    Deleted,
}

impl CaptureState {
    pub fn can_transition_to(self, next: CaptureState) -> bool {
        use CaptureState::*;
        matches!(
            (self, next),
            (Recording, PendingUpload) | (PendingUpload, Published) | (Recording | PendingUpload, Deleted)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapturedConversation {
    pub id: String,
    pub messages: Vec<Message>,
    pub url: String,
    pub model_hint: Option<String>,
    pub created_at: Timestamp,
    pub updated_at: Timestamp,
    pub state: CaptureState,
    pub feedback: ConversationFeedback,
    /// Rendered turns in front of this conversation that were not captured
    /// because their content had been deleted.
    #[serde(default)]
    pub hidden_prefix: Option<PrefixDigest>,
    /// Fingerprint of the rendered transcript, kept only on deleted entries.
    #[serde(default)]
    pub tombstone: Option<PrefixDigest>,
}

impl CapturedConversation {
    fn set_state(&mut self, next: CaptureState) {
        assert!(
            self.state.can_transition_to(next),
            "illegal capture transition {:?} -> {:?}",
            self.state,
            next
        );
        self.state = next;
    }

    /// Digests of every rendered prefix that ends inside `messages`, i.e.
    /// lengths `hidden + 1 ..= hidden + messages.len()`.
    fn rendered_chain(&self) -> Vec<PrefixDigest> {
        let mut acc = self.hidden_prefix.clone().unwrap_or_else(PrefixDigest::empty);
        let mut out = Vec::with_capacity(self.messages.len());
        for m in &self.messages {
            acc = acc.extend(m.role, &m.text);
            out.push(acc.clone());
        }
        out
    }

    /// Index of the first rendered turn that maps to `messages[0]`.
    fn hidden_len(&self) -> usize {
        self.hidden_prefix.as_ref().map_or(0, |p| p.len)
    }

    fn merge_ratings(&mut self, snap: &Snapshot, now: Timestamp, events: &mut Vec<StoreEvent>) {
        let hidden = self.hidden_len();
        for (index, message) in self.messages.iter_mut().enumerate() {
            let Some(turn) = snap.turns.get(hidden + index) else { break };
            if message.role != Role::Model {
                continue;
            }
            if let Some(rating) = turn.response_rating {
                if message.response_rating != Some(rating) {
                    message.response_rating = Some(rating);
                    self.updated_at = now;
                    events.push(StoreEvent::RatingMerged { id: self.id.clone(), index, rating });
                }
            }
        }
    }

    fn to_record(&self, profile: &UserProfile) -> UnifiedRecord {
        let mut record = UnifiedRecord::new(self.id.clone(), PLUGIN_SOURCE, self.messages.clone());
        record.model_name = self.model_hint.clone();
        record.user_id = Some(profile.user_id.clone());
        record.timestamp = Some(self.created_at);
        record.user_metadata = profile.demographics();
        if !self.url.is_empty() {
            record.conversation_metadata.insert(URL_KEY.into(), self.url.clone());
        }
        if let Some(rating) = self.feedback.conversation_rating {
            record.set_conversation_rating(rating);
        }
        record
    }
}

/// What an operation changed; used for traces and UI refresh.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum StoreEvent {
    Opened {
        id: String,
        url: String,
    },
    Appended {
        id: String,
        from_index: usize,
        count: usize,
    },
    Finalized {
        id: String,
    },
    RatingMerged {
        id: String,
        index: usize,
        rating: Rating,
    },
    /// Turns on the page that match deleted content and were not captured.
    Suppressed {
        turns: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UploadBatch {
    pub records: Vec<UnifiedRecord>,
    pub user_id: String,
    pub profile_snapshot: Metadata,
}

/// A batch handed to the transport, to be settled with
/// [`LocalStore::acknowledge`] or [`LocalStore::upload_failed`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutgoingBatch {
    pub batch_id: u64,
    pub batch: UploadBatch,
}

impl OutgoingBatch {
    pub fn is_empty(&self) -> bool {
        self.batch.records.is_empty()
    }

    pub fn conversation_ids(&self) -> impl Iterator<Item = &str> {
        self.batch.records.iter().map(|r| r.conversation_id.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CaptureError {
    #[error("terms of use have not been accepted")]
    TermsNotAccepted,
    #[error("unknown conversation {0}")]
    UnknownConversation(String),
    #[error("conversation {0} was already handed to the server")]
    AlreadyPublished(String),
    #[error("conversation {id} has no message {index}")]
    IndexOutOfRange { id: String, index: usize },
    #[error("message {index} of conversation {id} is not a model response")]
    NotAModelResponse { id: String, index: usize },
    #[error("malformed snapshot: {0}")]
    MalformedSnapshot(String),
}

/// Everything the client keeps locally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalStore {
    pub profile: UserProfile,
    pub terms_accepted: bool,
    pub sharing_enabled: bool,
    pub conversations: BTreeMap<String, CapturedConversation>,
    #[serde(default)]
    pub config: CaptureConfig,
    pub created_at: Timestamp,
    /// The conversation new snapshots are compared against.
    #[serde(default)]
    active: Option<String>,
    #[serde(default)]
    in_flight: BTreeMap<u64, Vec<String>>,
    #[serde(default)]
    suppressed: Vec<PrefixDigest>,
    #[serde(default)]
    next_conversation_seq: u64,
    #[serde(default)]
    next_batch_id: u64,
}

/// Formats 16 random bytes as a version-4 UUID string.
pub fn uuid_from_bytes(bytes: [u8; 16]) -> String {
    uuid::Builder::from_random_bytes(bytes).into_uuid().hyphenated().to_string()
}

/// A fresh random user id.
pub fn random_user_id<R: RngCore + ?Sized>(rng: &mut R) -> String {
    let mut bytes = [0u8; 16];
    rng.fill_bytes(&mut bytes);
    uuid_from_bytes(bytes)
}

/// Best-effort model identifier from a chat URL, e.g. `org/model` from
/// `https://huggingface.co/spaces/org/model`.
pub fn model_hint_from_url(url: &str) -> Option<String> {
    let rest = url.split_once("://").map_or(url, |(_, r)| r);
    let path = rest.split(['?', '#']).next().unwrap_or("");
    let segments: Vec<&str> = path.split('/').skip(1).filter(|s| !s.is_empty()).collect();
    for marker in ["spaces", "models"] {
        if let Some(pos) = segments.iter().position(|s| *s == marker) {
            if let (Some(owner), Some(name)) = (segments.get(pos + 1), segments.get(pos + 2)) {
                return Some(alloc::format!("{owner}/{name}"));
            }
        }
    }
    None
}

fn validate_snapshot(snap: &Snapshot) -> Result<(), CaptureError> {
    for (i, turn) in snap.turns.iter().enumerate() {
        if turn.text.trim().is_empty() {
            return Err(CaptureError::MalformedSnapshot(alloc::format!("turn {i} has no text")));
        }
    }
    Ok(())
}

impl LocalStore {
    /// A new store with a random user id, terms not yet accepted and
    /// sharing on.
    pub fn init<R: RngCore + ?Sized>(now: Timestamp, rng: &mut R) -> Self {
        Self::with_user_id(random_user_id(rng), now)
    }

    pub fn with_user_id(user_id: String, now: Timestamp) -> Self {
        LocalStore {
            profile: UserProfile::new(user_id),
            terms_accepted: false,
            sharing_enabled: true,
            conversations: BTreeMap::new(),
            config: CaptureConfig::default(),
            created_at: now,
            active: None,
            in_flight: BTreeMap::new(),
            suppressed: Vec::new(),
            next_conversation_seq: 0,
            next_batch_id: 0,
        }
    }

    pub fn with_config(mut self, config: CaptureConfig) -> Self {
        self.config = config;
        self
    }

    pub fn accept_terms(&mut self) {
        self.terms_accepted = true;
    }

    pub fn user_id(&self) -> &str {
        &self.profile.user_id
    }

    pub fn set_demographics(&mut self, age: Option<u32>, country: Option<String>, gender: Option<String>) {
        self.profile.age = age;
        self.profile.country = country;
        self.profile.gender = gender;
    }

    pub fn get(&self, id: &str) -> Option<&CapturedConversation> {
        self.conversations.get(id)
    }

    pub fn active_id(&self) -> Option<&str> {
        self.active.as_deref()
    }

    pub fn is_in_flight(&self, id: &str) -> bool {
        self.in_flight.values().any(|ids| ids.iter().any(|i| i == id))
    }

    /// Conversations the user can still review: not deleted and not yet
    /// uploaded. Oldest first.
    pub fn reviewable(&self) -> Vec<&CapturedConversation> {
        let mut out: Vec<_> =
            self.conversations.values().filter(|c| c.state != CaptureState::Deleted).collect();
        out.sort_by(|a, b| (a.created_at, &a.id).cmp(&(b.created_at, &b.id)));
        out
    }

    fn next_conversation_id(&mut self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.profile.user_id.as_bytes());
        hasher.update(self.next_conversation_seq.to_be_bytes());
        self.next_conversation_seq += 1;
        let digest = hasher.finalize();
        let mut bytes = [0u8; 16];
        bytes.copy_from_slice(&digest[..16]);
        uuid_from_bytes(bytes)
    }

    fn finalize(&mut self, id: &str, now: Timestamp, events: &mut Vec<StoreEvent>) {
        if let Some(conv) = self.conversations.get_mut(id) {
            if conv.state == CaptureState::Recording {
                conv.set_state(CaptureState::PendingUpload);
                conv.updated_at = now;
                events.push(StoreEvent::Finalized { id: id.into() });
            }
        }
        if self.active.as_deref() == Some(id) {
            self.active = None;
        }
    }

    fn purge_tombstones(&mut self, now: Timestamp) {
        let delay = self.config.upload_delay_secs;
        self.conversations
            .retain(|_, c| c.state != CaptureState::Deleted || now.seconds_since(c.created_at) < delay);
    }

    fn longest_suppressed_prefix(&self, snap: &Snapshot) -> Option<PrefixDigest> {
        if self.suppressed.is_empty() {
            return None;
        }
        PrefixDigest::chain(&snap.turns)
            .into_iter()
            .skip(1)
            .rev()
            .find(|prefix| self.suppressed.contains(prefix))
    }

    /// Applies one page snapshot.
    pub fn observe(&mut self, snap: &Snapshot, now: Timestamp) -> Result<Vec<StoreEvent>, CaptureError> {
        if !self.terms_accepted {
            return Err(CaptureError::TermsNotAccepted);
        }
        validate_snapshot(snap)?;
        let mut events = Vec::new();
        if !self.sharing_enabled {
            return Ok(events);
        }
        self.purge_tombstones(now);

        let active = self.active.as_ref().and_then(|id| self.conversations.get(id));
        match detect_boundary(active, snap) {
            Boundary::NoChange => {
                let id = self.active.clone().expect("NoChange implies an active conversation");
                let conv = self.conversations.get_mut(&id).expect("active id is stored");
                conv.merge_ratings(snap, now, &mut events);
            }
            Boundary::Continuation => {
                let id = self.active.clone().expect("Continuation implies an active conversation");
                let conv = self.conversations.get_mut(&id).expect("active id is stored");
                let from_index = conv.messages.len();
                let hidden = conv.hidden_len();
                for turn in &snap.turns[hidden + from_index..] {
                    let index = conv.messages.len() as u32;
                    conv.messages.push(Message::new(index, turn.role, turn.text.clone()));
                }
                conv.updated_at = now;
                let count = conv.messages.len() - from_index;
                events.push(StoreEvent::Appended { id: id.clone(), from_index, count });
                conv.merge_ratings(snap, now, &mut events);
            }
            Boundary::NewConversation => {
                if let Some(previous) = self.active.clone() {
                    self.finalize(&previous, now, &mut events);
                }
                self.open(snap, now, &mut events);
            }
        }
        Ok(events)
    }

    fn open(&mut self, snap: &Snapshot, now: Timestamp, events: &mut Vec<StoreEvent>) {
        let hidden_prefix = self.longest_suppressed_prefix(snap);
        let hidden = hidden_prefix.as_ref().map_or(0, |p| p.len);
        if hidden > 0 {
            events.push(StoreEvent::Suppressed { turns: hidden });
        }
        if snap.turns.len() == hidden {
            return;
        }
        let id = self.next_conversation_id();
        let messages = snap.turns[hidden..]
            .iter()
            .enumerate()
            .map(|(i, t)| Message::new(i as u32, t.role, t.text.clone()))
            .collect();
        let mut conv = CapturedConversation {
            id: id.clone(),
            messages,
            url: snap.url.clone(),
            model_hint: model_hint_from_url(&snap.url),
            created_at: now,
            updated_at: now,
            state: CaptureState::Recording,
            feedback: ConversationFeedback::default(),
            hidden_prefix,
            tombstone: None,
        };
        events.push(StoreEvent::Opened { id: id.clone(), url: snap.url.clone() });
        events.push(StoreEvent::Appended { id: id.clone(), from_index: 0, count: conv.messages.len() });
        conv.merge_ratings(snap, now, events);
        self.conversations.insert(id.clone(), conv);
        self.active = Some(id);
    }

    /// Finalizes recording conversations idle for longer than `idle_threshold_secs`.
    pub fn finalize_idle(&mut self, now: Timestamp, idle_threshold_secs: i64) -> Vec<String> {
        let idle: Vec<String> = self
            .conversations
            .values()
            .filter(|c| {
                c.state == CaptureState::Recording && now.seconds_since(c.updated_at) > idle_threshold_secs
            })
            .map(|c| c.id.clone())
            .collect();
        let mut events = Vec::new();
        for id in &idle {
            self.finalize(id, now, &mut events);
        }
        idle
    }

    fn editable(&mut self, id: &str) -> Result<&mut CapturedConversation, CaptureError> {
        if self.is_in_flight(id) {
            return Err(CaptureError::AlreadyPublished(id.into()));
        }
        match self.conversations.get_mut(id) {
            Some(c) if c.state == CaptureState::Deleted => Err(CaptureError::UnknownConversation(id.into())),
            Some(c) if c.state == CaptureState::Published => Err(CaptureError::AlreadyPublished(id.into())),
            Some(c) => Ok(c),
            None => Err(CaptureError::UnknownConversation(id.into())),
        }
    }

    pub fn rate_conversation(&mut self, id: &str, rating: Rating) -> Result<(), CaptureError> {
        self.editable(id)?.feedback.rate(rating);
        Ok(())
    }

    pub fn rate_response(
        &mut self,
        id: &str,
        message_index: usize,
        rating: Rating,
    ) -> Result<(), CaptureError> {
        let conv = self.editable(id)?;
        let message = conv
            .messages
            .get_mut(message_index)
            .ok_or_else(|| CaptureError::IndexOutOfRange { id: id.into(), index: message_index })?;
        if message.role != Role::Model {
            return Err(CaptureError::NotAModelResponse { id: id.into(), index: message_index });
        }
        message.response_rating = Some(rating);
        Ok(())
    }

    /// Erases a conversation's content, keeping a tombstone until its upload
    /// window would have passed. Deleting twice is a no-op.
    pub fn delete_conversation(&mut self, id: &str) -> Result<(), CaptureError> {
        if self.conversations.get(id).is_some_and(|c| c.state == CaptureState::Deleted) {
            return Ok(());
        }
        let conv = self.editable(id)?;
        let chain = conv.rendered_chain();
        let fingerprint = chain.last().cloned().or_else(|| conv.hidden_prefix.clone());
        conv.set_state(CaptureState::Deleted);
        conv.messages = Vec::new();
        conv.url = String::new();
        conv.model_hint = None;
        conv.feedback = ConversationFeedback::default();
        conv.hidden_prefix = None;
        conv.tombstone = fingerprint;
        if self.active.as_deref() == Some(id) {
            self.active = None;
        }
        // Every prefix is suppressed, not just the whole transcript: an
        // edit after deletion re-renders the early turns under a new tail.
        for digest in chain {
            if !self.suppressed.contains(&digest) {
                self.suppressed.push(digest);
            }
        }
        if self.suppressed.len() > MAX_SUPPRESSED {
            let excess = self.suppressed.len() - MAX_SUPPRESSED;
            self.suppressed.drain(..excess);
        }
        Ok(())
    }

    /// Pauses or resumes capture. Pausing finalizes the conversation being
    /// recorded; resuming starts a new one on the next snapshot.
    pub fn set_sharing(&mut self, enabled: bool, now: Timestamp) -> Vec<StoreEvent> {
        let mut events = Vec::new();
        if !enabled {
            if let Some(active) = self.active.clone() {
                self.finalize(&active, now, &mut events);
            }
        }
        self.sharing_enabled = enabled;
        events
    }

    fn batch_of(&mut self, ids: Vec<String>) -> OutgoingBatch {
        let records: Vec<UnifiedRecord> =
            ids.iter().map(|id| self.conversations[id].to_record(&self.profile)).collect();
        let batch_id = self.next_batch_id;
        self.next_batch_id += 1;
        if !ids.is_empty() {
            self.in_flight.insert(batch_id, ids);
        }
        OutgoingBatch {
            batch_id,
            batch: UploadBatch {
                records,
                user_id: self.profile.user_id.clone(),
                profile_snapshot: self.profile.demographics(),
            },
        }
    }

    fn uploadable(&self) -> impl Iterator<Item = &CapturedConversation> {
        let locked: BTreeSet<&str> = self.in_flight.values().flatten().map(String::as_str).collect();
        self.conversations
            .values()
            .filter(move |c| c.state == CaptureState::PendingUpload && !locked.contains(c.id.as_str()))
    }

    /// Finalized conversations at least `upload_delay_secs` old.
    pub fn collect_due_batch(&mut self, now: Timestamp) -> OutgoingBatch {
        self.purge_tombstones(now);
        let delay = self.config.upload_delay_secs;
        let due: Vec<String> = self
            .uploadable()
            .filter(|c| now.seconds_since(c.created_at) >= delay)
            .map(|c| c.id.clone())
            .collect();
        self.batch_of(due)
    }

    /// Everything not deleted, regardless of age. Recording conversations
    /// are finalized first.
    pub fn publish_now(&mut self, now: Timestamp) -> OutgoingBatch {
        let recording: Vec<String> = self
            .conversations
            .values()
            .filter(|c| c.state == CaptureState::Recording)
            .map(|c| c.id.clone())
            .collect();
        let mut events = Vec::new();
        for id in &recording {
            self.finalize(id, now, &mut events);
        }
        let all: Vec<String> = self.uploadable().map(|c| c.id.clone()).collect();
        self.batch_of(all)
    }

    /// The server stored the batch: its conversations are published and
    /// dropped from the store. Returns the removed ids.
    pub fn acknowledge(&mut self, batch_id: u64) -> Vec<String> {
        let ids = self.in_flight.remove(&batch_id).unwrap_or_default();
        for id in &ids {
            if let Some(mut conv) = self.conversations.remove(id) {
                conv.set_state(CaptureState::Published);
            }
        }
        ids
    }

    /// The upload failed: the batch's conversations become uploadable again.
    pub fn upload_failed(&mut self, batch_id: u64) -> Vec<String> {
        self.in_flight.remove(&batch_id).unwrap_or_default()
    }
}
