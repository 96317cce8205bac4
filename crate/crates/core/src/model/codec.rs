//! JSON-Lines encoding of [`UnifiedRecord`].
//!
//! One record is one line of UTF-8 JSON. Keys appear in schema order, absent
//! optionals are written as `null` and unknown keys are rejected on input.

use alloc::string::{String, ToString};

use super::{validate_record, UnifiedRecord, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("record failed validation: {}", .0.summary())]
pub struct SerializeError(pub ValidationReport);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed record at byte {offset}: {reason}")]
pub struct ParseError {
    pub offset: usize,
    pub reason: String,
}

/// Encodes a valid record as a single JSON line (no trailing newline).
pub fn serialize_record(record: &UnifiedRecord) -> Result<String, SerializeError> {
    let report = validate_record(record);
    if !report.valid {
        return Err(SerializeError(report));
    }
    Ok(serde_json::to_string(record).expect("records always encode"))
}

/// Decodes one JSON line. Only the schema is checked; call
/// [`validate_record`] for the content rules.
pub fn parse_record(line: &[u8]) -> Result<UnifiedRecord, ParseError> {
    serde_json::from_slice(line).map_err(|err| ParseError {
        offset: byte_offset(line, err.line(), err.column()),
        reason: err.to_string(),
    })
}

/// Turns serde_json's 1-based line/column into a 0-based byte offset.
fn byte_offset(input: &[u8], line: usize, column: usize) -> usize {
    let line_start: usize =
        input.split(|&b| b == b'\n').take(line.saturating_sub(1)).map(|l| l.len() + 1).sum();
    (line_start + column.saturating_sub(1)).min(input.len())
}
