use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::CapturedConversation;
use crate::model::{Rating, Role};

/// One rendered turn as seen on the page.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Turn {
    pub role: Role,
    pub text: String,
    #[serde(default)]
    pub response_rating: Option<Rating>,
}

impl Turn {
    pub fn new(role: Role, text: impl Into<String>) -> Self {
        Turn { role, text: text.into(), response_rating: None }
    }

    pub fn user(text: impl Into<String>) -> Self {
        Turn::new(Role::User, text)
    }

    pub fn model(text: impl Into<String>) -> Self {
        Turn::new(Role::Model, text)
    }
}

/// The full transcript rendered on a page at one poll.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub url: String,
    pub turns: Vec<Turn>,
    /// Monotonic poll clock, in milliseconds.
    #[serde(default)]
    pub observed_at: u64,
}

impl Snapshot {
    pub fn new(url: impl Into<String>, turns: Vec<Turn>) -> Self {
        Snapshot { url: url.into(), turns, observed_at: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    NewConversation,
    Continuation,
    NoChange,
}

/// Classifies a snapshot relative to the conversation being recorded.
///
/// Turns hidden in front of the active conversation (a deleted prefix) are
/// skipped before comparing.
pub fn detect_boundary(active: Option<&CapturedConversation>, snap: &Snapshot) -> Boundary {
    let Some(active) = active else {
        return Boundary::NewConversation;
    };
    let hidden = active.hidden_prefix.as_ref().map_or(0, |p| p.len);
    if snap.turns.len() < hidden {
        return Boundary::NewConversation;
    }
    let visible = &snap.turns[hidden..];
    let same = |n: usize| {
        active.messages[..n].iter().zip(visible).all(|(m, t)| m.role == t.role && m.text == t.text)
    };
    let captured = active.messages.len();
    if visible.len() == captured && same(captured) {
        Boundary::NoChange
    } else if snap.url == active.url && visible.len() > captured && same(captured) {
        Boundary::Continuation
    } else {
        Boundary::NewConversation
    }
}

/// One-way fingerprint of the first `len` rendered turns of a page.
///
/// Used to recognise a transcript whose content was deleted without keeping
/// any of that content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixDigest {
    pub len: usize,
    #[serde(with = "hex::serde")]
    pub digest: [u8; 32],
}

impl PrefixDigest {
    pub fn empty() -> Self {
        PrefixDigest { len: 0, digest: Sha256::digest(b"sharelm-transcript").into() }
    }

    pub fn extend(&self, role: Role, text: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(self.digest);
        hasher.update([match role {
            Role::User => b'u',
            Role::Model => b'm',
        }]);
        hasher.update((text.len() as u64).to_le_bytes());
        hasher.update(text.as_bytes());
        PrefixDigest { len: self.len + 1, digest: hasher.finalize().into() }
    }

    /// Running digests of every prefix of `turns`, starting with the empty one.
    pub fn chain(turns: &[Turn]) -> Vec<PrefixDigest> {
        let mut out = Vec::with_capacity(turns.len() + 1);
        out.push(PrefixDigest::empty());
        for turn in turns {
            let next = out[out.len() - 1].extend(turn.role, &turn.text);
            out.push(next);
        }
        out
    }
}
