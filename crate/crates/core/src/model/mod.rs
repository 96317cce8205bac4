//! The unified conversation record and its building blocks.
//!
//! A [`UnifiedRecord`] is the single interchange format of the platform: the
//! capture client uploads it, the ingestion service stores it and releases
//! are written as one record per line.

mod codec;
mod validate;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::time::Timestamp;

pub use codec::{parse_record, serialize_record, ParseError, SerializeError};
pub use validate::{validate_record, ValidationReport, Violation};

/// Metadata key holding the conversation-level rating.
pub const CONVERSATION_RATING_KEY: &str = "conversation_rating";

pub type Metadata = BTreeMap<String, String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    User,
    Model,
}

/// Thumbs up / thumbs down feedback, on a whole conversation or on one
/// model response.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rating {
    ThumbsUp,
    ThumbsDown,
}

impl Rating {
    pub fn as_str(self) -> &'static str {
        match self {
            Rating::ThumbsUp => "thumbs_up",
            Rating::ThumbsDown => "thumbs_down",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "thumbs_up" => Some(Rating::ThumbsUp),
            "thumbs_down" => Some(Rating::ThumbsDown),
            _ => None,
        }
    }
}

impl fmt::Display for Rating {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One turn of a conversation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Message {
    pub index: u32,
    pub role: Role,
    pub text: String,
    #[serde(default)]
    pub response_rating: Option<Rating>,
}

impl Message {
    pub fn new(index: u32, role: Role, text: impl Into<String>) -> Self {
        Message { index, role, text: text.into(), response_rating: None }
    }
}

/// Conversation-level feedback. Rating again replaces the earlier value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConversationFeedback {
    pub conversation_rating: Option<Rating>,
}

impl ConversationFeedback {
    pub fn rate(&mut self, rating: Rating) {
        self.conversation_rating = Some(rating);
    }
}

/// A random user identifier plus voluntary demographics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UserProfile {
    pub user_id: String,
    #[serde(default)]
    pub age: Option<u32>,
    #[serde(default)]
    pub country: Option<String>,
    #[serde(default)]
    pub gender: Option<String>,
}

impl UserProfile {
    pub fn new(user_id: impl Into<String>) -> Self {
        UserProfile { user_id: user_id.into(), age: None, country: None, gender: None }
    }

    /// The demographics that were filled in, keyed `age`, `country`, `gender`.
    pub fn demographics(&self) -> Metadata {
        use alloc::string::ToString;
        let mut out = Metadata::new();
        if let Some(age) = self.age {
            out.insert("age".into(), age.to_string());
        }
        if let Some(country) = self.country.as_ref().filter(|c| !c.trim().is_empty()) {
            out.insert("country".into(), country.clone());
        }
        if let Some(gender) = self.gender.as_ref().filter(|g| !g.trim().is_empty()) {
            out.insert("gender".into(), gender.clone());
        }
        out
    }
}

/// True for the canonical lowercase 8-4-4-4-12 UUID text form.
pub fn is_uuid_text(text: &str) -> bool {
    let bytes = text.as_bytes();
    bytes.len() == 36
        && bytes.iter().enumerate().all(|(i, &b)| match i {
            8 | 13 | 18 | 23 => b == b'-',
            _ => b.is_ascii_digit() || (b'a'..=b'f').contains(&b),
        })
}

/// The eight-field release record.
///
/// Field order here is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnifiedRecord {
    pub conversation_id: String,
    pub conversation: Vec<Message>,
    #[serde(default)]
    pub model_name: Option<String>,
    #[serde(default)]
    pub user_id: Option<String>,
    #[serde(default)]
    pub timestamp: Option<Timestamp>,
    pub source: String,
    pub user_metadata: Metadata,
    pub conversation_metadata: Metadata,
}

impl UnifiedRecord {
    /// A record with the required fields set and everything else empty.
    pub fn new(
        conversation_id: impl Into<String>,
        source: impl Into<String>,
        conversation: Vec<Message>,
    ) -> Self {
        UnifiedRecord {
            conversation_id: conversation_id.into(),
            conversation,
            model_name: None,
            user_id: None,
            timestamp: None,
            source: source.into(),
            user_metadata: Metadata::new(),
            conversation_metadata: Metadata::new(),
        }
    }

    pub fn conversation_rating(&self) -> Option<Rating> {
        self.conversation_metadata.get(CONVERSATION_RATING_KEY).and_then(|value| Rating::parse(value))
    }

    pub fn set_conversation_rating(&mut self, rating: Rating) {
        self.conversation_metadata.insert(CONVERSATION_RATING_KEY.into(), rating.as_str().into());
    }
}

/// Builds a message list from `(role, text)` pairs, numbering from zero.
pub fn messages_from_turns<'a, I>(turns: I) -> Vec<Message>
where
    I: IntoIterator<Item = (Role, &'a str)>,
{
    turns.into_iter().enumerate().map(|(i, (role, text))| Message::new(i as u32, role, text)).collect()
}
