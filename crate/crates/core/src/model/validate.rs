use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use super::{Rating, Role, UnifiedRecord, CONVERSATION_RATING_KEY};

/// One broken rule, located by a dotted/indexed field path such as
/// `conversation[2].text`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub field_path: String,
    pub rule: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field_path, self.rule)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport { valid: violations.is_empty(), violations }
    }

    /// `"path: rule"` entries joined with `"; "`.
    pub fn summary(&self) -> String {
        let parts: Vec<String> = self.violations.iter().map(|v| format!("{v}")).collect();
        parts.join("; ")
    }
}

struct Collector(Vec<Violation>);

impl Collector {
    fn push(&mut self, path: impl Into<String>, rule: &str, detail: impl Into<String>) {
        self.0.push(Violation { field_path: path.into(), rule: rule.into(), detail: detail.into() });
    }
}

/// Checks every schema rule and reports all violations found.
pub fn validate_record(record: &UnifiedRecord) -> ValidationReport {
    let mut out = Collector(Vec::new());

    if record.conversation_id.trim().is_empty() {
        out.push("conversation_id", "required", "conversation_id is missing or blank");
    } else if record.conversation_id.chars().any(char::is_control) {
        out.push("conversation_id", "printable", "conversation_id contains control characters");
    }

    if record.conversation.is_empty() {
        out.push("conversation", "non-empty", "a conversation needs at least one message");
    }
    for (position, message) in record.conversation.iter().enumerate() {
        let path = format!("conversation[{position}]");
        if message.index as usize != position {
            out.push(
                format!("{path}.index"),
                "contiguous",
                format!("expected index {position}, found {}", message.index),
            );
        }
        if message.text.trim().is_empty() {
            out.push(format!("{path}.text"), "non-empty", "message text is blank");
        }
        if message.response_rating.is_some() && message.role != Role::Model {
            out.push(
                format!("{path}.response_rating"),
                "model-only",
                "only model responses can carry a response rating",
            );
        }
    }

    if let Some(model) = &record.model_name {
        if model.trim().is_empty() {
            out.push("model_name", "non-empty", "model_name must be null or non-blank");
        }
    }
    if let Some(user) = &record.user_id {
        if user.trim().is_empty() {
            out.push("user_id", "non-empty", "user_id must be null or non-blank");
        }
    }
    if record.source.trim().is_empty() {
        out.push("source", "required", "source is missing or blank");
    }

    for (field, map) in
        [("user_metadata", &record.user_metadata), ("conversation_metadata", &record.conversation_metadata)]
    {
        for key in map.keys() {
            if key.trim().is_empty() {
                out.push(field, "key-non-empty", "metadata keys must be non-blank");
            }
        }
    }
    if let Some(value) = record.conversation_metadata.get(CONVERSATION_RATING_KEY) {
        if Rating::parse(value).is_none() {
            out.push(
                format!("conversation_metadata.{CONVERSATION_RATING_KEY}"),
                "rating-value",
                format!("expected thumbs_up or thumbs_down, found {value:?}"),
            );
        }
    }

    ValidationReport::from_violations(out.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{messages_from_turns, Message};

    fn two_turns() -> UnifiedRecord {
        UnifiedRecord::new(
            "c1",
            crate::PLUGIN_SOURCE,
            messages_from_turns([(Role::User, "hi"), (Role::Model, "hello")]),
        )
    }

    fn paths(report: &ValidationReport) -> Vec<&str> {
        report.violations.iter().map(|v| v.field_path.as_str()).collect()
    }

    #[test]
    fn well_formed_record_is_valid() {
        let report = validate_record(&two_turns());
        assert!(report.valid);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn empty_conversation() {
        let mut record = two_turns();
        record.conversation.clear();
        let report = validate_record(&record);
        assert!(!report.valid);
        assert_eq!(paths(&report), ["conversation"]);
        assert_eq!(report.summary(), "conversation: non-empty");
    }

    #[test]
    fn missing_conversation_id() {
        let mut record = two_turns();
        record.conversation_id = String::new();
        let report = validate_record(&record);
        assert!(!report.valid);
        assert_eq!(paths(&report), ["conversation_id"]);
    }

    #[test]
    fn reports_every_violation() {
        let mut record = two_turns();
        record.source = " ".into();
        record.conversation[0].response_rating = Some(Rating::ThumbsUp);
        record.conversation[1].index = 5;
        record.conversation.push(Message::new(2, Role::User, "\n\t"));
        record.conversation_metadata.insert(CONVERSATION_RATING_KEY.into(), "meh".into());
        record.user_id = Some(String::new());
        let report = validate_record(&record);
        assert_eq!(
            paths(&report),
            [
                "conversation[0].response_rating",
                "conversation[1].index",
                "conversation[2].text",
                "user_id",
                "source",
                "conversation_metadata.conversation_rating",
            ]
        );
    }

    #[test]
    fn consecutive_same_role_turns_are_allowed() {
        let record = UnifiedRecord::new(
            "c2",
            "hh",
            messages_from_turns([(Role::User, "a"), (Role::User, "b"), (Role::Model, "c")]),
        );
        assert!(validate_record(&record).valid);
    }
}
