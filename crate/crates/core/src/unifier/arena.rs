use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::fields::{self, Row};
use crate::model::{messages_from_turns, Role, UnifiedRecord};

/// Field mapping for two-model battle rows (Chatbot Arena layout).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ArenaConfig {
    pub id_field: Option<String>,
    pub model_a_field: String,
    pub model_b_field: String,
    pub winner_field: String,
    pub conversation_a_field: String,
    pub conversation_b_field: String,
    pub role_field: String,
    pub content_field: String,
    pub user_roles: Vec<String>,
    pub model_roles: Vec<String>,
    pub timestamp_field: Option<String>,
    pub language_field: Option<String>,
    /// Raw winner label → `model_a` | `model_b` | `tie`.
    pub winner_labels: BTreeMap<String, String>,
}

impl Default for ArenaConfig {
    fn default() -> Self {
        let winner_labels =
            [("model_a", "model_a"), ("model_b", "model_b"), ("tie", "tie"), ("tie (bothbad)", "tie")]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect();
        ArenaConfig {
            id_field: Some("question_id".into()),
            model_a_field: "model_a".into(),
            model_b_field: "model_b".into(),
            winner_field: "winner".into(),
            conversation_a_field: "conversation_a".into(),
            conversation_b_field: "conversation_b".into(),
            role_field: "role".into(),
            content_field: "content".into(),
            user_roles: fields::strings(&["user", "human"]),
            model_roles: fields::strings(&["assistant", "model", "bot"]),
            timestamp_field: Some("tstamp".into()),
            language_field: Some("language".into()),
            winner_labels,
        }
    }
}

pub(super) fn turn_list(
    value: &Value,
    role_field: &str,
    content_field: &str,
    user_roles: &[String],
    model_roles: &[String],
) -> Result<Vec<(Role, String)>, String> {
    let items = value.as_array().ok_or("turn list is not an array")?;
    let mut turns = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let role = item
            .get(role_field)
            .and_then(Value::as_str)
            .ok_or_else(|| format!("turn {i}: missing {role_field}"))?;
        let role = fields::role_of(role, user_roles, model_roles)
            .ok_or_else(|| format!("turn {i}: unknown role {role:?}"))?;
        let text = item
            .get(content_field)
            .and_then(Value::as_str)
            .ok_or_else(|| format!("turn {i}: missing {content_field}"))?;
        turns.push((role, text.to_string()));
    }
    Ok(turns)
}

pub(super) fn adapt_row(
    config: &ArenaConfig,
    source: &str,
    row_number: usize,
    obj: &Map<String, Value>,
) -> Result<Vec<UnifiedRecord>, String> {
    let mut row = Row::new(obj);
    let raw_winner = row.require_str(&config.winner_field)?;
    let winner = config
        .winner_labels
        .get(raw_winner.trim())
        .ok_or_else(|| format!("unknown winner label {raw_winner:?}"))?;
    if !matches!(winner.as_str(), "model_a" | "model_b" | "tie") {
        return Err(format!("winner label {raw_winner:?} maps to unsupported {winner:?}"));
    }
    let model_a = row.require_str(&config.model_a_field)?;
    let model_b = row.require_str(&config.model_b_field)?;
    let conv_a = row.require(&config.conversation_a_field)?;
    let conv_b = row.require(&config.conversation_b_field)?;
    let local = row
        .take_opt(config.id_field.as_deref())
        .and_then(fields::id_text)
        .unwrap_or_else(|| row_number.to_string());
    let timestamp = row.take_opt(config.timestamp_field.as_deref()).map(fields::timestamp).transpose()?;
    let language = row.take_opt(config.language_field.as_deref()).map(fields::scalar_text);
    let battle_id = format!("{source}-{local}");

    let mut out = Vec::with_capacity(2);
    for (side, model, conv) in [("a", model_a, conv_a), ("b", model_b, conv_b)] {
        let turns = turn_list(
            conv,
            &config.role_field,
            &config.content_field,
            &config.user_roles,
            &config.model_roles,
        )
        .map_err(|e| format!("conversation_{side}: {e}"))?;
        let messages = messages_from_turns(turns.iter().map(|(r, t)| (*r, t.as_str())));
        let mut record = UnifiedRecord::new(format!("{battle_id}-{side}"), source, messages);
        record.model_name = Some(model.to_string());
        record.timestamp = timestamp;
        let meta = &mut record.conversation_metadata;
        meta.insert("battle_id".into(), battle_id.clone());
        meta.insert("winner".into(), winner.clone());
        meta.insert("side".into(), format!("model_{side}"));
        if let Some(language) = &language {
            meta.insert("language".into(), language.clone());
        }
        row.keep_rest(meta);
        out.push(record);
    }
    Ok(out)
}

/// Converts battle rows; unconvertible rows are returned as
/// `(row number, reason)`.
pub fn adapt_arena_pairs<'a>(
    config: &ArenaConfig,
    source: &str,
    rows: impl IntoIterator<Item = &'a Map<String, Value>>,
) -> (Vec<UnifiedRecord>, Vec<(usize, String)>) {
    super::collect_rows(rows, |n, obj| adapt_row(config, source, n, obj))
}
