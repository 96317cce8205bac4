use std::collections::BTreeMap;

use proptest::prelude::*;
use sharelm_core::model::{
    parse_record, serialize_record, validate_record, Message, Metadata, Rating, Role, UnifiedRecord,
};
use sharelm_core::Timestamp;

const FIELD_NAMES: [&str; 8] = [
    "conversation_id",
    "conversation",
    "model_name",
    "user_id",
    "timestamp",
    "source",
    "user_metadata",
    "conversation_metadata",
];

fn text() -> impl Strategy<Value = String> {
    // Leading letter keeps it non-blank; the tail mixes escapes and
    // multi-byte characters.
    (
        "[a-zA-Z]",
        prop::collection::vec(
            prop_oneof![
                Just("\"".to_string()),
                Just("\\".to_string()),
                Just("\n".to_string()),
                Just("\u{0001}".to_string()),
                Just("é".to_string()),
                Just("🙂".to_string()),
                "[ -~]{1,8}",
            ],
            0..6,
        ),
    )
        .prop_map(|(head, tail)| format!("{head}{}", tail.concat()))
}

fn rating() -> impl Strategy<Value = Option<Rating>> {
    prop_oneof![Just(None), Just(Some(Rating::ThumbsUp)), Just(Some(Rating::ThumbsDown))]
}

fn message() -> impl Strategy<Value = (Role, String, Option<Rating>)> {
    (any::<bool>(), text(), rating()).prop_map(|(is_user, text, rating)| {
        if is_user {
            (Role::User, text, None)
        } else {
            (Role::Model, text, rating)
        }
    })
}

fn metadata() -> impl Strategy<Value = Metadata> {
    prop::collection::btree_map("[a-z_]{1,8}", text(), 0..4)
}

prop_compose! {
    fn record()(
        id in prop_oneof![
            "[0-9a-f]{8}-[0-9a-f]{4}-4[0-9a-f]{3}-[89ab][0-9a-f]{3}-[0-9a-f]{12}",
            "[a-z_]{2,8}-[0-9]{1,6}",
        ],
        turns in prop::collection::vec(message(), 1..6),
        model in prop::option::of("[a-z0-9/.-]{1,12}"),
        user in prop::option::of("[a-z0-9-]{1,12}"),
        ts in prop::option::of(0i64..4_000_000_000),
        source in "[a-z_]{1,12}",
        user_metadata in metadata(),
        mut conversation_metadata in metadata(),
        conv_rating in rating(),
    ) -> UnifiedRecord {
        conversation_metadata.remove("conversation_rating");
        let conversation = turns
            .into_iter()
            .enumerate()
            .map(|(i, (role, text, rating))| {
                let mut m = Message::new(i as u32, role, text);
                m.response_rating = rating;
                m
            })
            .collect();
        let mut r = UnifiedRecord::new(id, source, conversation);
        r.model_name = model;
        r.user_id = user;
        r.timestamp = ts.and_then(Timestamp::from_unix_seconds);
        r.user_metadata = user_metadata;
        r.conversation_metadata = conversation_metadata;
        if let Some(rating) = conv_rating {
            r.set_conversation_rating(rating);
        }
        r
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn serialize_then_parse_is_identity(r in record()) {
        prop_assert!(validate_record(&r).valid);
        let line = serialize_record(&r).unwrap();
        prop_assert!(!line.contains('\n'));
        prop_assert_eq!(parse_record(line.as_bytes()).unwrap(), r);
    }

    #[test]
    fn top_level_keys_are_the_schema(r in record()) {
        let line = serialize_record(&r).unwrap();
        let value: BTreeMap<String, serde_json::Value> = serde_json::from_str(&line).unwrap();
        let mut expected: Vec<&str> = FIELD_NAMES.to_vec();
        expected.sort_unstable();
        prop_assert_eq!(value.keys().map(String::as_str).collect::<Vec<_>>(), expected);
        // Schema order on the wire.
        let positions: Vec<usize> = FIELD_NAMES
            .iter()
            .map(|k| line.find(&format!("\"{k}\":")).unwrap())
            .collect();
        prop_assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn serialization_is_deterministic(r in record()) {
        prop_assert_eq!(serialize_record(&r).unwrap(), serialize_record(&r.clone()).unwrap());
    }
}

#[test]
fn unknown_key_is_rejected_with_offset() {
    let r = UnifiedRecord::new("c", "s", vec![Message::new(0, Role::User, "hi")]);
    let line = serialize_record(&r).unwrap();
    let extended = format!("{},\"extra\":1}}", &line[..line.len() - 1]);
    let err = parse_record(extended.as_bytes()).unwrap_err();
    assert!(err.reason.contains("extra"));
    assert!(err.offset > 0 && err.offset <= extended.len());
}
