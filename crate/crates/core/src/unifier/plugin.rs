use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::model::{parse_record, UnifiedRecord};

pub(super) fn adapt_line(line: &str) -> Result<Vec<UnifiedRecord>, String> {
    parse_record(line.as_bytes()).map(|r| alloc::vec![r]).map_err(|e| e.to_string())
}

/// Re-validates release-format lines; invalid ones are returned as
/// `(line number, reason)`.
pub fn adapt_plugin_native<'a>(
    lines: impl IntoIterator<Item = &'a str>,
) -> (Vec<UnifiedRecord>, Vec<(usize, String)>) {
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (i, line) in lines.into_iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match super::check(adapt_line(line)) {
            Ok(mut r) => records.append(&mut r),
            Err(reason) => skipped.push((i + 1, reason)),
        }
    }
    (records, skipped)
}
