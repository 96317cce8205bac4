//! UTC instants with one-second resolution.

use alloc::string::String;
use core::fmt;

use chrono::{DateTime, NaiveDate, SecondsFormat, Utc};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const SECONDS_PER_HOUR: i64 = 3_600;
pub const SECONDS_PER_DAY: i64 = 86_400;

/// A UTC instant, stored as whole seconds since the Unix epoch.
///
/// The textual form is RFC 3339 with a `Z` suffix and no fractional part,
/// e.g. `2024-01-02T03:04:05Z`. Parsing accepts any RFC 3339 offset and
/// truncates sub-second precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Timestamp(i64);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid timestamp {0:?}: expected RFC 3339")]
pub struct TimestampError(pub String);

/// Earliest and latest instants with a four-digit year.
const MIN_SECONDS: i64 = -62_167_219_200; // 0000-01-01T00:00:00Z
const MAX_SECONDS: i64 = 253_402_300_799; // 9999-12-31T23:59:59Z

impl Timestamp {
    pub const UNIX_EPOCH: Timestamp = Timestamp(0);

    /// Returns `None` outside years 0000..=9999.
    pub fn from_unix_seconds(secs: i64) -> Option<Self> {
        (MIN_SECONDS..=MAX_SECONDS).contains(&secs).then_some(Timestamp(secs))
    }

    pub fn unix_seconds(self) -> i64 {
        self.0
    }

    pub fn parse_rfc3339(text: &str) -> Result<Self, TimestampError> {
        let parsed = DateTime::parse_from_rfc3339(text.trim()).map_err(|_| TimestampError(text.into()))?;
        Self::from_unix_seconds(parsed.timestamp()).ok_or_else(|| TimestampError(text.into()))
    }

    /// Like [`Timestamp::parse_rfc3339`] but also accepts a bare
    /// `YYYY-MM-DD` date (midnight UTC) and `YYYY-MM-DD HH:MM:SS` (UTC).
    pub fn parse_lenient(text: &str) -> Result<Self, TimestampError> {
        let trimmed = text.trim();
        if let Ok(ts) = Self::parse_rfc3339(trimmed) {
            return Ok(ts);
        }
        if let Ok(date) = NaiveDate::parse_from_str(trimmed, "%Y-%m-%d") {
            let secs = date.and_hms_opt(0, 0, 0).map(|dt| dt.and_utc().timestamp());
            if let Some(ts) = secs.and_then(Self::from_unix_seconds) {
                return Ok(ts);
            }
        }
        for fmt in ["%Y-%m-%d %H:%M:%S", "%Y-%m-%d %H:%M:%S%.f", "%Y-%m-%dT%H:%M:%S"] {
            if let Ok(dt) = chrono::NaiveDateTime::parse_from_str(trimmed, fmt) {
                if let Some(ts) = Self::from_unix_seconds(dt.and_utc().timestamp()) {
                    return Ok(ts);
                }
            }
        }
        Err(TimestampError(text.into()))
    }

    pub fn to_rfc3339(self) -> String {
        self.as_datetime().to_rfc3339_opts(SecondsFormat::Secs, true)
    }

    /// `YYYYMMDD`, used for release file names.
    pub fn compact_date(self) -> String {
        use alloc::string::ToString;
        self.as_datetime().format("%Y%m%d").to_string()
    }

    pub fn plus_seconds(self, secs: i64) -> Self {
        Timestamp((self.0.saturating_add(secs)).clamp(MIN_SECONDS, MAX_SECONDS))
    }

    /// Signed number of seconds from `earlier` to `self`.
    pub fn seconds_since(self, earlier: Timestamp) -> i64 {
        self.0 - earlier.0
    }

    fn as_datetime(self) -> DateTime<Utc> {
        DateTime::from_timestamp(self.0, 0).expect("timestamp kept within chrono range")
    }
}

impl fmt::Display for Timestamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_rfc3339())
    }
}

impl Serialize for Timestamp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_rfc3339())
    }
}

impl<'de> Deserialize<'de> for Timestamp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = <alloc::borrow::Cow<'de, str>>::deserialize(deserializer)?;
        Timestamp::parse_rfc3339(&text).map_err(serde::de::Error::custom)
    }
}
