use proptest::prelude::*;
use sharelm_core::anonymizer::{apply_spans, scrub_record, scrub_text, EntityKind, PlaceholderRegistry};
use sharelm_core::model::{messages_from_turns, Role, UnifiedRecord};

const FILLER: &[&str] = &[
    "the",
    "model",
    "answered",
    "quickly",
    "and",
    "then",
    "we",
    "talked",
    "about",
    "weather",
    "code",
    "tomorrow",
    "please",
    "review",
    "this",
    "paragraph",
    "it",
    "was",
    "fine",
    "overall",
    "thanks",
];

const NAMES: &[&str] = &["Jennifer", "Margaret", "Robert", "Patricia", "Kimberly", "Gonzalez", "Nguyen"];

fn scrub(text: &str) -> String {
    scrub_text(text, &mut PlaceholderRegistry::new()).scrubbed_text
}

fn filler() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(FILLER), 1..12).prop_map(|w| w.join(" "))
}

/// A seeded entity and the kind a correct detector must report.
fn entity() -> impl Strategy<Value = (EntityKind, String)> {
    prop_oneof![
        ("[a-z]{2,8}", "[a-z]{2,8}", prop::sample::select(&["com", "org", "net", "io"][..]))
            .prop_map(|(u, d, t)| (EntityKind::Email, format!("{u}@{d}.{t}"))),
        (200u16..999, 200u16..999, 1000u16..9999)
            .prop_map(|(a, b, c)| (EntityKind::Phone, format!("({a}) {b}-{c}"))),
        (1u8..=254, 0u8..=255, 0u8..=255, 1u8..=254)
            .prop_map(|(a, b, c, d)| (EntityKind::IpAddress, format!("{a}.{b}.{c}.{d}"))),
        prop::sample::select(NAMES).prop_map(|n| (EntityKind::PersonName, n.to_string())),
        (
            1u32..99999,
            prop::sample::select(&["Maple", "Oak", "Sunset", "Lincoln"][..]),
            prop::sample::select(&["Street", "Ave", "Road", "Blvd"][..])
        )
            .prop_map(|(n, w, s)| (EntityKind::StreetAddress, format!("{n} {w} {s}"))),
        (100_000_000u64..999_999_999_999).prop_map(|n| (EntityKind::IdNumber, n.to_string())),
        ("[a-z]{3,6}", "[a-z0-9]{4,8}", "[a-z]{3,8}").prop_map(|(u, p, h)| (
            EntityKind::UrlWithUserinfo,
            format!("https://{u}:{p}@{h}.example.com/x")
        )),
    ]
}

fn seeded_doc() -> impl Strategy<Value = (String, Vec<(EntityKind, String)>)> {
    prop::collection::vec((filler(), entity()), 1..5).prop_map(|parts| {
        let mut text = String::new();
        let mut seeded = Vec::new();
        for (words, (kind, surface)) in parts {
            text.push_str(&words);
            text.push(' ');
            text.push_str(&surface);
            text.push_str(" . ");
            seeded.push((kind, surface));
        }
        text.push_str("bye");
        (text, seeded)
    })
}

fn noisy_text() -> impl Strategy<Value = String> {
    prop::collection::vec(
        prop_oneof![
            filler(),
            entity().prop_map(|(_, s)| s),
            "[A-Za-z0-9@.:/\\[\\]_()+ -]{1,16}",
            Just("[EMAIL_1]".to_string()),
        ],
        0..8,
    )
    .prop_map(|parts| parts.join(" "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn seeded_entities_are_replaced((text, seeded) in seeded_doc()) {
        let result = scrub_text(&text, &mut PlaceholderRegistry::new());
        for (kind, surface) in &seeded {
            prop_assert!(!result.scrubbed_text.contains(surface.as_str()), "{surface} left in {}", result.scrubbed_text);
            let start = text.find(surface.as_str()).unwrap();
            let covered = result.entities.iter().any(|e| e.start <= start && start + surface.len() <= e.end && e.kind == *kind);
            prop_assert!(covered, "{kind:?} {surface} not reported: {:?}", result.entities);
        }
    }

    #[test]
    fn scrubbing_is_idempotent(text in noisy_text()) {
        let once = scrub(&text);
        prop_assert_eq!(scrub(&once), once);
    }

    #[test]
    fn spans_rebuild_the_output(text in noisy_text()) {
        let result = scrub_text(&text, &mut PlaceholderRegistry::new());
        prop_assert_eq!(apply_spans(&text, &result.entities), result.scrubbed_text.clone());
        let mut cursor = 0;
        let mut restored = String::new();
        for span in &result.entities {
            prop_assert!(cursor <= span.start && span.start < span.end && span.end <= text.len());
            prop_assert!(text.is_char_boundary(span.start) && text.is_char_boundary(span.end));
            restored.push_str(&text[cursor..span.start]);
            restored.push_str(&text[span.start..span.end]);
            cursor = span.end;
        }
        restored.push_str(&text[cursor..]);
        prop_assert_eq!(restored, text);
    }

    #[test]
    fn clean_text_passes_through(text in filler()) {
        prop_assert_eq!(scrub(&text), text);
    }
}

#[test]
fn record_shares_placeholders_across_messages() {
    let record = UnifiedRecord::new(
        "c",
        "s",
        messages_from_turns([
            (Role::User, "I am Jennifer, write to jen@mail.org"),
            (Role::Model, "Hello Jennifer, I will not email jen@mail.org"),
        ]),
    );
    let out = scrub_record(&record);
    assert_eq!(out.conversation[0].text, "I am [NAME_1], write to [EMAIL_1]");
    assert_eq!(out.conversation[1].text, "Hello [NAME_1], I will not email [EMAIL_1]");
    assert_eq!(scrub_record(&out), out);
}
