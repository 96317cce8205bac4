//! The detector set. Every detector works on ASCII structure, so byte
//! offsets always land on UTF-8 character boundaries.

use alloc::vec::Vec;

use super::names::NAMES;
use super::EntityKind;

/// A detected entity before placeholder assignment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub kind: EntityKind,
    pub start: usize,
    pub end: usize,
}

/// Street-type words that end an address.
const STREET_SUFFIXES: &[&str] = &[
    "Alley",
    "Ave",
    "Avenue",
    "Blvd",
    "Boulevard",
    "Cir",
    "Circle",
    "Ct",
    "Court",
    "Dr",
    "Drive",
    "Hwy",
    "Highway",
    "Lane",
    "Ln",
    "Parkway",
    "Pkwy",
    "Pl",
    "Place",
    "Rd",
    "Road",
    "Sq",
    "Square",
    "St",
    "Street",
    "Ter",
    "Terrace",
    "Way",
];

const MIN_PHONE_DIGITS: usize = 7;
const MAX_PHONE_DIGITS: usize = 15;
const MIN_ID_DIGITS: usize = 9;

/// Runs every detector and keeps a non-overlapping selection, sorted by
/// start offset. On overlap the higher-precedence kind wins, then the
/// earlier start, then the longer match.
pub fn find_entities(text: &str) -> Vec<Candidate> {
    let mut all = Vec::new();
    find_urls(text, &mut all);
    find_emails(text, &mut all);
    find_ipv4(text, &mut all);
    find_phones(text, &mut all);
    find_addresses(text, &mut all);
    find_id_numbers(text, &mut all);
    find_names(text, &mut all);

    all.sort_by_key(|c| (c.kind.precedence(), c.start, usize::MAX - (c.end - c.start)));
    let mut chosen: Vec<Candidate> = Vec::new();
    for candidate in all {
        if chosen.iter().all(|c| candidate.end <= c.start || c.end <= candidate.start) {
            chosen.push(candidate);
        }
    }
    chosen.sort_by_key(|c| c.start);
    chosen
}

/// Characters that glue onto a neighbouring token. Brackets count so that a
/// placeholder never exposes a new match next to it.
fn is_wordish(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '[' || c == ']'
}

fn char_before(text: &str, at: usize) -> Option<char> {
    text[..at].chars().next_back()
}

fn char_after(text: &str, at: usize) -> Option<char> {
    text[at..].chars().next()
}

fn open_before(text: &str, at: usize) -> bool {
    !char_before(text, at).is_some_and(is_wordish)
}

fn open_after(text: &str, at: usize) -> bool {
    !char_after(text, at).is_some_and(is_wordish)
}

/// `.5` or `-5` style continuation of a number.
fn continues_number_after(bytes: &[u8], at: usize) -> bool {
    at + 1 < bytes.len() && matches!(bytes[at], b'.' | b'-' | b',') && bytes[at + 1].is_ascii_digit()
}

fn continues_number_before(bytes: &[u8], at: usize) -> bool {
    at >= 2 && matches!(bytes[at - 1], b'.' | b'-' | b',') && bytes[at - 2].is_ascii_digit()
}

fn is_email_local(b: u8) -> bool {
    b.is_ascii_alphanumeric() || matches!(b, b'.' | b'_' | b'%' | b'+' | b'-')
}

fn is_domain_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || matches!(b, b'.' | b'-')
}

/// Length of the longest valid `label(.label)+` domain at the start of
/// `bytes`, where the final label is alphabetic and at least two long.
fn domain_len(bytes: &[u8]) -> Option<usize> {
    let run = bytes.iter().take_while(|&&b| is_domain_byte(b)).count();
    let mut end = run;
    loop {
        while end > 0 && matches!(bytes[end - 1], b'.' | b'-') {
            end -= 1;
        }
        let domain = &bytes[..end];
        let labels: Vec<&[u8]> = domain.split(|&b| b == b'.').collect();
        if labels.len() < 2 {
            return None;
        }
        let tld = labels[labels.len() - 1];
        let labels_ok = labels.iter().all(|l| !l.is_empty() && l[0] != b'-' && l[l.len() - 1] != b'-');
        if labels_ok && tld.len() >= 2 && tld.iter().all(u8::is_ascii_alphabetic) {
            return Some(end);
        }
        // Drop the last label and retry with a shorter domain.
        end = domain.iter().rposition(|&b| b == b'.')?;
    }
}

fn find_emails(text: &str, out: &mut Vec<Candidate>) {
    let bytes = text.as_bytes();
    for (at, _) in text.match_indices('@') {
        let mut start = at;
        while start > 0 && is_email_local(bytes[start - 1]) {
            start -= 1;
        }
        while start < at && bytes[start] == b'.' {
            start += 1;
        }
        if start == at || bytes[at - 1] == b'.' || !open_before(text, start) {
            continue;
        }
        let Some(len) = domain_len(&bytes[at + 1..]) else { continue };
        let end = at + 1 + len;
        if open_after(text, end) {
            out.push(Candidate { kind: EntityKind::Email, start, end });
        }
    }
}

fn find_urls(text: &str, out: &mut Vec<Candidate>) {
    let bytes = text.as_bytes();
    for (at, _) in text.match_indices("://") {
        let mut start = at;
        while start > 0
            && (bytes[start - 1].is_ascii_alphanumeric() || matches!(bytes[start - 1], b'+' | b'.' | b'-'))
        {
            start -= 1;
        }
        while start < at && !bytes[start].is_ascii_alphabetic() {
            start += 1;
        }
        if start == at || !open_before(text, start) {
            continue;
        }
        let authority_start = at + 3;
        let authority_len = bytes[authority_start..]
            .iter()
            .take_while(|&&b| !b.is_ascii_whitespace() && !matches!(b, b'/' | b'?' | b'#'))
            .count();
        let authority = &bytes[authority_start..authority_start + authority_len];
        let Some(userinfo_end) = authority.iter().rposition(|&b| b == b'@') else { continue };
        if userinfo_end == 0 || userinfo_end + 1 == authority.len() {
            continue;
        }
        let mut end = authority_start
            + bytes[authority_start..]
                .iter()
                .take_while(|&&b| !b.is_ascii_whitespace() && !matches!(b, b'"' | b'\'' | b'<' | b'>'))
                .count();
        // Stop at the first non-ASCII character.
        if let Some(pos) = bytes[authority_start..end].iter().position(|&b| b >= 0x80) {
            end = authority_start + pos;
        }
        while end > authority_start + userinfo_end + 1
            && matches!(bytes[end - 1], b'.' | b',' | b';' | b':' | b'!' | b'?' | b')' | b']' | b'}')
        {
            end -= 1;
        }
        out.push(Candidate { kind: EntityKind::UrlWithUserinfo, start, end });
    }
}

fn digit_run(bytes: &[u8], from: usize) -> usize {
    bytes[from..].iter().take_while(|b| b.is_ascii_digit()).count()
}

fn find_ipv4(text: &str, out: &mut Vec<Candidate>) {
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if !bytes[i].is_ascii_digit() || (i > 0 && bytes[i - 1].is_ascii_digit()) {
            i += 1;
            continue;
        }
        let start = i;
        let mut pos = i;
        let mut octets = 0;
        let ok = loop {
            let len = digit_run(bytes, pos);
            if len == 0 || len > 3 {
                break false;
            }
            let value: u32 = text[pos..pos + len].parse().unwrap_or(u32::MAX);
            if value > 255 {
                break false;
            }
            pos += len;
            octets += 1;
            if octets == 4 {
                break true;
            }
            if bytes.get(pos) != Some(&b'.') {
                break false;
            }
            pos += 1;
        };
        if ok
            && open_before(text, start)
            && !continues_number_before(bytes, start)
            && open_after(text, pos)
            && !continues_number_after(bytes, pos)
        {
            out.push(Candidate { kind: EntityKind::IpAddress, start, end: pos });
            i = pos;
        } else {
            i += 1;
        }
    }
}

/// Parses a phone number starting at `start`; returns its end offset.
///
/// Groups are read greedily; when the whole run is not a phone number the
/// longest acceptable prefix of groups is used, so a trailing unrelated
/// number does not hide the phone number in front of it.
fn phone_at(text: &str, start: usize) -> Option<usize> {
    let bytes = text.as_bytes();
    let mut pos = start;
    let plus = bytes[pos] == b'+';
    if plus {
        pos += 1;
    }
    // (digit count, end offset, separator that followed)
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut separators: Vec<u8> = Vec::new();
    let mut parens: Vec<bool> = Vec::new();
    loop {
        let open = bytes.get(pos) == Some(&b'(');
        let digits_at = if open { pos + 1 } else { pos };
        let len = digit_run(bytes, digits_at);
        if len == 0 || len > 4 {
            break;
        }
        let mut next = digits_at + len;
        if open {
            if bytes.get(next) != Some(&b')') {
                break;
            }
            next += 1;
        }
        groups.push((len, next));
        parens.push(open);
        pos = next;

        // A following group needs a separator, except right after ")".
        let sep = bytes.get(pos).copied();
        let after_sep = bytes.get(pos + 1).copied();
        let continues = |b: Option<u8>| b.is_some_and(|b| b.is_ascii_digit() || b == b'(');
        match sep {
            Some(b' ' | b'-' | b'.') if continues(after_sep) => {
                separators.push(sep.unwrap());
                pos += 1;
            }
            Some(b) if open && b.is_ascii_digit() => separators.push(b' '),
            _ => break,
        }
    }

    (2..=groups.len()).rev().find_map(|k| {
        let lens: Vec<usize> = groups[..k].iter().map(|g| g.0).collect();
        let end = groups[k - 1].1;
        let seps = &separators[..k - 1];
        let ok = phone_shape(&lens, seps, plus, parens[..k].contains(&true))
            && open_after(text, end)
            && !continues_number_after(bytes, end);
        ok.then_some(end)
    })
}

fn phone_shape(groups: &[usize], separators: &[u8], plus: bool, parens: bool) -> bool {
    let digits: usize = groups.iter().sum();
    if !(MIN_PHONE_DIGITS..=MAX_PHONE_DIGITS).contains(&digits) || groups.iter().all(|&g| g < 3) {
        return false;
    }
    let dotted = separators.contains(&b'.');
    if dotted && separators.iter().any(|&s| s != b'.') {
        return false;
    }
    if !plus && !parens {
        // Calendar dates and grouped thousands are not phone numbers.
        let date_like = matches!(groups, [4, 1..=2, 1..=2] | [1..=2, 1..=2, 4]);
        let thousands = dotted && groups.len() >= 3 && groups[1..].iter().all(|&g| g == 3);
        if date_like || thousands {
            return false;
        }
    }
    true
}

fn find_phones(text: &str, out: &mut Vec<Candidate>) {
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let can_start =
            matches!(b, b'+' | b'(') || (b.is_ascii_digit() && (i == 0 || !bytes[i - 1].is_ascii_digit()));
        if can_start && open_before(text, i) && !matches!(char_before(text, i), Some('.' | '+' | '-' | '(')) {
            if let Some(end) = phone_at(text, i) {
                out.push(Candidate { kind: EntityKind::Phone, start: i, end });
                i = end;
                continue;
            }
        }
        i += 1;
    }
}

fn find_id_numbers(text: &str, out: &mut Vec<Candidate>) {
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let len = digit_run(bytes, i);
        if len == 0 {
            i += 1;
            continue;
        }
        let end = i + len;
        if len >= MIN_ID_DIGITS
            && open_before(text, i)
            && open_after(text, end)
            && !continues_number_before(bytes, i)
            && !continues_number_after(bytes, end)
        {
            out.push(Candidate { kind: EntityKind::IdNumber, start: i, end });
        }
        i = end;
    }
}

/// A capitalised ASCII word (`Abc`) starting at `at`; returns its end.
fn capitalized_word(bytes: &[u8], at: usize) -> Option<usize> {
    let first = *bytes.get(at)?;
    if !first.is_ascii_uppercase() {
        return None;
    }
    let rest = bytes[at + 1..].iter().take_while(|b| b.is_ascii_lowercase()).count();
    (rest >= 1).then_some(at + 1 + rest)
}

fn is_known_name(word: &str) -> bool {
    let mut lower = [0u8; 32];
    if word.len() > lower.len() {
        return false;
    }
    for (dst, src) in lower.iter_mut().zip(word.bytes()) {
        *dst = src.to_ascii_lowercase();
    }
    let lower = core::str::from_utf8(&lower[..word.len()]).unwrap_or("");
    NAMES.binary_search(&lower).is_ok()
}

/// Name tokens: capitalised dictionary words bounded by non-word
/// characters. Adjacent tokens separated by one space merge into one span.
fn find_names(text: &str, out: &mut Vec<Candidate>) {
    let bytes = text.as_bytes();
    let mut tokens: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if i > 0 && bytes[i - 1].is_ascii_alphabetic() {
            i += 1;
            continue;
        }
        match capitalized_word(bytes, i) {
            Some(end)
                if open_before(text, i)
                    && open_after(text, end)
                    && char_before(text, i) != Some('\'')
                    && is_known_name(&text[i..end]) =>
            {
                tokens.push((i, end));
                i = end;
            }
            _ => i += 1,
        }
    }
    let mut k = 0;
    while k < tokens.len() {
        let (start, mut end) = tokens[k];
        out.push(Candidate { kind: EntityKind::PersonName, start, end });
        let mut j = k + 1;
        while j < tokens.len() && tokens[j].0 == end + 1 && bytes[end] == b' ' {
            end = tokens[j].1;
            j += 1;
        }
        if j > k + 1 {
            out.push(Candidate { kind: EntityKind::PersonName, start, end });
            for &(s, e) in &tokens[k + 1..j] {
                out.push(Candidate { kind: EntityKind::PersonName, start: s, end: e });
            }
        }
        k = j;
    }
}

/// `<number> <Word>{1,4} <Suffix>[.]`, e.g. `221 Baker Street`.
fn find_addresses(text: &str, out: &mut Vec<Candidate>) {
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let len = digit_run(bytes, i);
        if len == 0 {
            i += 1;
            continue;
        }
        let start = i;
        i += len;
        if len > 6 || !open_before(text, start) || continues_number_before(bytes, start) {
            continue;
        }
        let mut pos = start + len;
        let mut words = 0;
        let mut found = None;
        while words < 5 && bytes.get(pos) == Some(&b' ') {
            let word_start = pos + 1;
            let word_end = capitalized_word(bytes, word_start)
                .or_else(|| ordinal(bytes, word_start))
                .or_else(|| initial(bytes, word_start));
            let Some(word_end) = word_end else { break };
            let word = &text[word_start..word_end];
            if words >= 1 && STREET_SUFFIXES.contains(&word) {
                let mut end = word_end;
                if bytes.get(end) == Some(&b'.') && !bytes.get(end + 1).is_some_and(u8::is_ascii_alphanumeric)
                {
                    end += 1;
                }
                if open_after(text, end) {
                    found = Some(end);
                }
                break;
            }
            pos = match bytes.get(word_end) {
                Some(b' ') => word_end,
                Some(b'.') if word_end - word_start == 1 => word_end + 1,
                _ => break,
            };
            words += 1;
        }
        if let Some(end) = found {
            out.push(Candidate { kind: EntityKind::StreetAddress, start, end });
            i = end;
        }
    }
}

/// A single capital letter such as the `W` in `12 W 34th Street`.
fn initial(bytes: &[u8], at: usize) -> Option<usize> {
    let first = *bytes.get(at)?;
    (first.is_ascii_uppercase() && matches!(bytes.get(at + 1), Some(b' ' | b'.'))).then_some(at + 1)
}

/// `1st`, `22nd`, `3rd`, `45th`.
fn ordinal(bytes: &[u8], at: usize) -> Option<usize> {
    let digits = digit_run(bytes, at);
    if digits == 0 || digits > 3 {
        return None;
    }
    let suffix = bytes.get(at + digits..at + digits + 2)?;
    matches!(suffix, b"st" | b"nd" | b"rd" | b"th").then_some(at + digits + 2)
}
