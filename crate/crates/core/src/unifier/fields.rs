use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde_json::{Map, Value};

use crate::model::{Metadata, Role};
use crate::time::Timestamp;

pub(crate) const EXTRA_PREFIX: &str = "x_";

/// Tracks which fields of a row were mapped so the rest can be kept.
pub(crate) struct Row<'a> {
    obj: &'a Map<String, Value>,
    consumed: BTreeSet<&'a str>,
}

impl<'a> Row<'a> {
    pub(crate) fn new(obj: &'a Map<String, Value>) -> Self {
        Row { obj, consumed: BTreeSet::new() }
    }

    pub(crate) fn take(&mut self, key: &str) -> Option<&'a Value> {
        let (k, v) = self.obj.get_key_value(key)?;
        self.consumed.insert(k.as_str());
        if v.is_null() {
            None
        } else {
            Some(v)
        }
    }

    pub(crate) fn take_opt(&mut self, key: Option<&str>) -> Option<&'a Value> {
        key.and_then(|k| self.take(k))
    }

    pub(crate) fn require(&mut self, key: &str) -> Result<&'a Value, String> {
        self.take(key).ok_or_else(|| format!("missing field {key}"))
    }

    pub(crate) fn require_str(&mut self, key: &str) -> Result<&'a str, String> {
        self.require(key)?.as_str().ok_or_else(|| format!("field {key} is not a string"))
    }

    /// Copies every field not taken so far into `meta` under `x_` keys.
    pub(crate) fn keep_rest(&self, meta: &mut Metadata) {
        for (key, value) in self.obj {
            if !self.consumed.contains(key.as_str()) && !value.is_null() {
                meta.insert(extra_key(key), scalar_text(value));
            }
        }
    }
}

pub(crate) fn extra_key(key: &str) -> String {
    format!("{EXTRA_PREFIX}{key}")
}

/// Strings as-is, everything else as compact JSON.
pub(crate) fn scalar_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Local ids can be strings or numbers.
pub(crate) fn id_text(value: &Value) -> Option<String> {
    match value {
        Value::String(s) if !s.trim().is_empty() => Some(s.trim().to_string()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

/// Unix seconds (integer or fractional) or a date/time string.
pub(crate) fn timestamp(value: &Value) -> Result<Timestamp, String> {
    match value {
        Value::Number(n) => n
            .as_i64()
            .or_else(|| n.as_f64().filter(|f| f.is_finite()).map(|f| f as i64))
            .and_then(Timestamp::from_unix_seconds)
            .ok_or_else(|| format!("timestamp {n} out of range")),
        Value::String(s) => Timestamp::parse_lenient(s.trim()).map_err(|e| e.to_string()),
        other => Err(format!("unsupported timestamp {other}")),
    }
}

pub(crate) fn role_of(label: &str, user_roles: &[String], model_roles: &[String]) -> Option<Role> {
    let label = label.trim();
    if user_roles.iter().any(|r| r.eq_ignore_ascii_case(label)) {
        Some(Role::User)
    } else if model_roles.iter().any(|r| r.eq_ignore_ascii_case(label)) {
        Some(Role::Model)
    } else {
        None
    }
}

pub(crate) fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}
