use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::fields::{self, Row};
use crate::model::{messages_from_turns, Role, UnifiedRecord};

/// Field mapping for preference-pair transcripts (HH-RLHF layout).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PairwiseConfig {
    pub chosen_field: String,
    pub rejected_field: String,
    /// Row id field; rows without one are named by line number.
    pub id_field: Option<String>,
    pub human_marker: String,
    pub assistant_marker: String,
    /// Fixed model name for the whole source, if known.
    pub model_name: Option<String>,
}

impl Default for PairwiseConfig {
    fn default() -> Self {
        PairwiseConfig {
            chosen_field: "chosen".into(),
            rejected_field: "rejected".into(),
            id_field: Some("id".into()),
            human_marker: "\n\nHuman:".into(),
            assistant_marker: "\n\nAssistant:".into(),
            model_name: None,
        }
    }
}

/// Splits a delimiter-encoded transcript into turns. Empty turns (such as
/// a trailing bare `Assistant:`) are dropped. A transcript may also start
/// with a marker lacking its leading newlines.
pub fn split_transcript(text: &str, config: &PairwiseConfig) -> Result<Vec<(Role, String)>, String> {
    let human = config.human_marker.as_str();
    let assistant = config.assistant_marker.as_str();
    if human.is_empty() || assistant.is_empty() {
        return Err("empty turn delimiter in config".into());
    }
    let padded;
    let text = if !text.starts_with(human)
        && !text.starts_with(assistant)
        && (text.starts_with(human.trim_start()) || text.starts_with(assistant.trim_start()))
    {
        let lead = &human[..human.len() - human.trim_start().len()];
        padded = format!("{lead}{text}");
        padded.as_str()
    } else {
        text
    };

    let mut marks: Vec<(usize, usize, Role)> = Vec::new();
    let mut at = 0;
    while at < text.len() {
        let rest = &text[at..];
        let next_h = rest.find(human).map(|i| (i, human.len(), Role::User));
        let next_a = rest.find(assistant).map(|i| (i, assistant.len(), Role::Model));
        let next = match (next_h, next_a) {
            (Some(h), Some(a)) => {
                if a.0 < h.0 {
                    a
                } else {
                    h
                }
            }
            (Some(h), None) => h,
            (None, Some(a)) => a,
            (None, None) => break,
        };
        marks.push((at + next.0, next.1, next.2));
        at += next.0 + next.1;
    }
    if marks.is_empty() {
        return Err("transcript has no turn delimiters".into());
    }
    if !text[..marks[0].0].trim().is_empty() {
        return Err("transcript has text before the first turn delimiter".into());
    }
    let mut turns = Vec::with_capacity(marks.len());
    for (i, &(start, len, role)) in marks.iter().enumerate() {
        let end = marks.get(i + 1).map_or(text.len(), |m| m.0);
        let body = text[start + len..end].trim();
        if !body.is_empty() {
            turns.push((role, body.to_string()));
        }
    }
    if turns.is_empty() {
        return Err("transcript has no non-empty turns".into());
    }
    Ok(turns)
}

pub(super) fn adapt_row(
    config: &PairwiseConfig,
    source: &str,
    row_number: usize,
    obj: &Map<String, Value>,
) -> Result<Vec<UnifiedRecord>, String> {
    let mut row = Row::new(obj);
    let chosen = row.require_str(&config.chosen_field)?;
    let rejected = row.require_str(&config.rejected_field)?;
    let local = row
        .take_opt(config.id_field.as_deref())
        .and_then(fields::id_text)
        .unwrap_or_else(|| row_number.to_string());
    let pair_id = format!("{source}-{local}");

    let mut out = Vec::with_capacity(2);
    for (label, transcript) in [("chosen", chosen), ("rejected", rejected)] {
        let turns = split_transcript(transcript, config).map_err(|e| format!("{label}: {e}"))?;
        let messages = messages_from_turns(turns.iter().map(|(r, t)| (*r, t.as_str())));
        let mut record = UnifiedRecord::new(format!("{pair_id}-{label}"), source, messages);
        record.model_name = config.model_name.clone();
        record.conversation_metadata.insert("pair_id".into(), pair_id.clone());
        record.conversation_metadata.insert("preference".into(), label.into());
        row.keep_rest(&mut record.conversation_metadata);
        out.push(record);
    }
    Ok(out)
}

/// Converts preference-pair rows; unconvertible rows are returned as
/// `(row number, reason)`.
pub fn adapt_pairwise_preference<'a>(
    config: &PairwiseConfig,
    source: &str,
    rows: impl IntoIterator<Item = &'a Map<String, Value>>,
) -> (Vec<UnifiedRecord>, Vec<(usize, String)>) {
    super::collect_rows(rows, |n, obj| adapt_row(config, source, n, obj))
}
