use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::fields::{self, Row};
use crate::model::{Message, Rating, Role, UnifiedRecord};

/// Field mapping for turn-list conversations with optional per-turn scores
/// and demographics (PRISM layout; with scores and demographics unset it
/// also fits plain turn-list datasets).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SurveyConfig {
    pub id_field: Option<String>,
    pub user_id_field: Option<String>,
    pub model_field: Option<String>,
    /// Per-turn model name, used when the row has none.
    pub turn_model_field: Option<String>,
    pub turns_field: String,
    pub role_field: String,
    pub content_field: String,
    pub score_field: Option<String>,
    pub timestamp_field: Option<String>,
    pub language_field: Option<String>,
    /// Nested object of demographic answers. Keys listed in
    /// `demographic_keys` keep their name; others get an `x_` prefix.
    pub demographics_field: Option<String>,
    pub demographic_keys: Vec<String>,
    /// Top-level fields copied into user_metadata under their own name.
    pub demographic_fields: Vec<String>,
    pub user_roles: Vec<String>,
    pub model_roles: Vec<String>,
    /// Model-turn score strictly above this becomes thumbs_up.
    pub thumbs_up_above: f64,
    /// Model-turn score strictly below this becomes thumbs_down.
    pub thumbs_down_below: f64,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        SurveyConfig {
            id_field: Some("conversation_id".into()),
            user_id_field: Some("user_id".into()),
            model_field: Some("model_name".into()),
            turn_model_field: Some("model_name".into()),
            turns_field: "conversation_history".into(),
            role_field: "role".into(),
            content_field: "content".into(),
            score_field: Some("score".into()),
            timestamp_field: Some("timestamp".into()),
            language_field: Some("language".into()),
            demographics_field: Some("demographics".into()),
            demographic_keys: fields::strings(&[
                "age",
                "gender",
                "birth_country",
                "reside_country",
                "country",
                "education",
                "employment_status",
                "ethnicity",
                "religion",
                "marital_status",
                "english_proficiency",
            ]),
            demographic_fields: fields::strings(&["age", "gender", "birth_country", "reside_country"]),
            user_roles: fields::strings(&["user", "human"]),
            model_roles: fields::strings(&["model", "assistant", "bot"]),
            thumbs_up_above: 60.0,
            thumbs_down_below: 40.0,
        }
    }
}

impl SurveyConfig {
    /// Plain turn lists: no scores, no demographics.
    pub fn turn_list(id_field: &str, model_field: &str, turns_field: &str) -> Self {
        SurveyConfig {
            id_field: Some(id_field.into()),
            user_id_field: None,
            model_field: Some(model_field.into()),
            turn_model_field: None,
            turns_field: turns_field.into(),
            score_field: None,
            demographics_field: None,
            demographic_keys: Vec::new(),
            demographic_fields: Vec::new(),
            ..SurveyConfig::default()
        }
    }

    pub fn rating_for(&self, score: f64) -> Option<Rating> {
        if score > self.thumbs_up_above {
            Some(Rating::ThumbsUp)
        } else if score < self.thumbs_down_below {
            Some(Rating::ThumbsDown)
        } else {
            None
        }
    }
}

fn score_value(value: &Value) -> Option<f64> {
    match value {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

pub(super) fn adapt_row(
    config: &SurveyConfig,
    source: &str,
    row_number: usize,
    obj: &Map<String, Value>,
) -> Result<Vec<UnifiedRecord>, String> {
    let mut row = Row::new(obj);
    let items = row
        .require(&config.turns_field)?
        .as_array()
        .ok_or_else(|| format!("field {} is not an array", config.turns_field))?;
    let local = row
        .take_opt(config.id_field.as_deref())
        .and_then(fields::id_text)
        .unwrap_or_else(|| row_number.to_string());

    let mut messages = Vec::with_capacity(items.len());
    let mut turn_model = None;
    for (i, item) in items.iter().enumerate() {
        let label = item
            .get(&config.role_field)
            .and_then(Value::as_str)
            .ok_or_else(|| format!("turn {i}: missing {}", config.role_field))?;
        let role = fields::role_of(label, &config.user_roles, &config.model_roles)
            .ok_or_else(|| format!("turn {i}: unknown role {label:?}"))?;
        let text = item
            .get(&config.content_field)
            .and_then(Value::as_str)
            .ok_or_else(|| format!("turn {i}: missing {}", config.content_field))?;
        let mut message = Message::new(messages.len() as u32, role, text);
        if role == Role::Model {
            if let Some(score) = config.score_field.as_deref().and_then(|f| item.get(f)) {
                if !score.is_null() {
                    let score =
                        score_value(score).ok_or_else(|| format!("turn {i}: score is not a number"))?;
                    message.response_rating = config.rating_for(score);
                }
            }
            if turn_model.is_none() {
                turn_model = config
                    .turn_model_field
                    .as_deref()
                    .and_then(|f| item.get(f))
                    .and_then(Value::as_str)
                    .map(str::to_string);
            }
        }
        messages.push(message);
    }

    let mut record = UnifiedRecord::new(format!("{source}-{local}"), source, messages);
    record.model_name = row
        .take_opt(config.model_field.as_deref())
        .and_then(Value::as_str)
        .map(str::to_string)
        .or(turn_model);
    record.user_id = row.take_opt(config.user_id_field.as_deref()).and_then(fields::id_text);
    record.timestamp = row.take_opt(config.timestamp_field.as_deref()).map(fields::timestamp).transpose()?;
    if let Some(language) = row.take_opt(config.language_field.as_deref()) {
        record.conversation_metadata.insert("language".into(), fields::scalar_text(language));
    }

    for key in &config.demographic_fields {
        if let Some(value) = row.take(key) {
            record.user_metadata.insert(key.clone(), fields::scalar_text(value));
        }
    }
    if let Some(demo) = row.take_opt(config.demographics_field.as_deref()) {
        let demo = demo.as_object().ok_or("demographics is not an object")?;
        for (key, value) in demo {
            if value.is_null() {
                continue;
            }
            let name = if config.demographic_keys.iter().any(|k| k == key) {
                key.clone()
            } else {
                fields::extra_key(key)
            };
            record.user_metadata.insert(name, fields::scalar_text(value));
        }
    }
    row.keep_rest(&mut record.conversation_metadata);
    Ok(alloc::vec![record])
}

/// Converts survey rows; unconvertible rows are returned as
/// `(row number, reason)`.
pub fn adapt_survey_conversations<'a>(
    config: &SurveyConfig,
    source: &str,
    rows: impl IntoIterator<Item = &'a Map<String, Value>>,
) -> (Vec<UnifiedRecord>, Vec<(usize, String)>) {
    super::collect_rows(rows, |n, obj| adapt_row(config, source, n, obj))
}
