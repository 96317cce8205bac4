//! One PASS/FAIL line per acceptance criterion. Seeds, case counts and time
//! limits are pinned below; the process exits non-zero if any line fails.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{Duration, Instant};

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sharelm::core::anonymizer::{scrub_text, EntityKind, PlaceholderRegistry};
use sharelm::core::capture::{StoreEvent, Turn};
use sharelm::core::ingest::{IngestLimits, MemoryRepository};
use sharelm::core::model::{
    messages_from_turns, parse_record, serialize_record, validate_record, Message, Metadata, Rating, Role,
    UnifiedRecord,
};
use sharelm::core::unifier::Registry;
use sharelm::core::{Timestamp, PLUGIN_SOURCE};
use sharelm::server::{router, AppState};
use sharelm::sim::{replay, BatchKind, ClockEntry, Replay, Session, Step};
use sharelm::unify_io::run_unify;
use tower::ServiceExt;

const SEED: u64 = 0x5EED_2024;
const DAY: i64 = 86_400;

const TRACES: usize = 1_000;
const DELAY_LIMIT: Duration = Duration::from_secs(10);
const PRIVACY_LIMIT: Duration = Duration::from_secs(30);
const GROW_SESSIONS: usize = 500;
const EDIT_SESSIONS: usize = 500;
const ANON_DOCS: usize = 1_000;
const INGEST_BATCH: usize = 100;
const INGEST_REPEATS: usize = 3;
const REMOVAL_CONVERSATIONS: usize = 10;
const UNIFY_MIN_ROWS: u64 = 50;
const UNIFY_LIMIT: Duration = Duration::from_secs(5);
const ROUNDTRIP_RECORDS: usize = 10_000;
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

const OPERATOR_TOKEN: &str = "acceptance-token";

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn ts(secs: i64) -> Timestamp {
    Timestamp::from_unix_seconds(secs).unwrap()
}

fn role_at(i: usize) -> Role {
    if i.is_multiple_of(2) {
        Role::User
    } else {
        Role::Model
    }
}

// ---------------------------------------------------------------------------
// Randomized capture traces

/// Content markers are `zq` plus six letters: fixed width, so a window scan
/// over any payload finds them exactly.
const TOKEN_LEN: usize = 8;

struct Tokens(u64);

impl Tokens {
    fn next(&mut self) -> String {
        let mut n = self.0;
        self.0 += 1;
        let mut letters = [b'a'; 6];
        for slot in letters.iter_mut().rev() {
            *slot = b'a' + (n % 26) as u8;
            n /= 26;
        }
        format!("zq{}", std::str::from_utf8(&letters).unwrap())
    }
}

fn token_of(text: &str) -> &str {
    &text[..TOKEN_LEN]
}

struct GeneratedTrace {
    session: Session,
    clock: Vec<ClockEntry>,
    /// Step indexes of the ticks placed just before and exactly one day
    /// after the first conversation opened.
    probe: Option<(usize, usize)>,
}

const ADVANCES: [i64; 13] =
    [0, 0, 5, 60, 600, 1_800, 1_801, 3_600, 4 * 3_600, 12 * 3_600, DAY - 1, DAY, DAY + 1];
const WORDS: [&str; 8] = ["about", "tides", "and", "poems", "for", "the", "weekend", "plans"];

fn generate_trace(rng: &mut ChaCha8Rng, tokens: &mut Tokens, index: usize) -> GeneratedTrace {
    let start = 1_704_067_200 + index as i64 * 30 * DAY;
    let mut now = start;
    let mut steps = Vec::new();
    let mut clock = Vec::new();
    let mut url_n = 0;
    let mut url = format!("https://chat.example.org/c/{index}-{url_n}");
    let mut page: Vec<String> = Vec::new();
    let mut opened_guess = 1usize;
    let mut sharing = true;

    let mut line = |rng: &mut ChaCha8Rng| {
        let word = WORDS.choose(rng).unwrap();
        format!("{} {word}", tokens.next())
    };
    let observe = |page: &[String], url: &str| Step::Observe {
        url: url.to_string(),
        turns: page.iter().enumerate().map(|(i, t)| Turn::new(role_at(i), t.clone())).collect(),
    };

    page.push(line(rng));
    steps.push(observe(&page, &url));
    let probe_at = start + DAY;
    let mut probe = rng.random_bool(0.5).then_some(None);

    let len = rng.random_range(20..60);
    while steps.len() < len {
        let advance = *ADVANCES.choose(rng).unwrap();
        if let Some(None) = probe {
            if now + advance >= probe_at {
                clock.push(ClockEntry {
                    before_step: steps.len(),
                    at: Some(ts(probe_at - 1)),
                    advance_secs: None,
                });
                steps.push(Step::Tick { deliver: true });
                clock.push(ClockEntry {
                    before_step: steps.len(),
                    at: Some(ts(probe_at)),
                    advance_secs: None,
                });
                steps.push(Step::Tick { deliver: true });
                probe = Some(Some((steps.len() - 2, steps.len() - 1)));
                now = probe_at;
                continue;
            }
        }
        if advance > 0 {
            clock.push(ClockEntry { before_step: steps.len(), at: None, advance_secs: Some(advance) });
            now += advance;
        }
        let roll = rng.random_range(0..100);
        let step = match roll {
            0..30 => {
                for _ in 0..rng.random_range(1..=3) {
                    page.push(line(rng));
                }
                observe(&page, &url)
            }
            30..40 => {
                url_n += 1;
                url = format!("https://chat.example.org/c/{index}-{url_n}");
                page = (0..rng.random_range(1..=3)).map(|_| line(rng)).collect();
                opened_guess += 1;
                observe(&page, &url)
            }
            40..48 => {
                if page.len() >= 2 {
                    page.truncate(rng.random_range(1..page.len()));
                }
                page.push(line(rng));
                opened_guess += 1;
                observe(&page, &url)
            }
            48..52 => observe(&page, &url),
            52..64 => {
                let conversation = if rng.random_bool(0.3) {
                    "active".to_string()
                } else {
                    format!("#{}", rng.random_range(0..opened_guess))
                };
                Step::Delete { conversation }
            }
            64..80 => Step::Tick { deliver: rng.random_bool(0.85) },
            80..84 => Step::PublishNow { deliver: rng.random_bool(0.85) },
            84..90 => Step::FinalizeIdle,
            90..93 => {
                sharing = !sharing;
                Step::SetSharing { enabled: sharing }
            }
            _ => Step::RateConversation {
                conversation: format!("#{}", rng.random_range(0..opened_guess)),
                rating: if rng.random_bool(0.5) { Rating::ThumbsUp } else { Rating::ThumbsDown },
            },
        };
        steps.push(step);
    }
    if let Some(None) = probe {
        if now < probe_at {
            clock.push(ClockEntry {
                before_step: steps.len(),
                at: Some(ts(probe_at - 1)),
                advance_secs: None,
            });
            steps.push(Step::Tick { deliver: true });
            clock.push(ClockEntry { before_step: steps.len(), at: Some(ts(probe_at)), advance_secs: None });
            steps.push(Step::Tick { deliver: true });
            probe = Some(Some((steps.len() - 2, steps.len() - 1)));
        } else {
            probe = None;
        }
    }
    // Let everything left become due.
    steps.push(Step::SetSharing { enabled: true });
    clock.push(ClockEntry { before_step: steps.len(), at: None, advance_secs: Some(2 * DAY) });
    steps.push(Step::Tick { deliver: true });

    let session = Session { user_id: None, config: None, start: ts(start), terms_accepted: true, steps };
    GeneratedTrace { session, clock, probe: probe.flatten() }
}

struct Traces {
    generated: Vec<GeneratedTrace>,
    runs: Vec<Replay>,
    elapsed: Duration,
}

fn run_traces() -> Traces {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut tokens = Tokens(0);
    let generated: Vec<_> = (0..TRACES).map(|i| generate_trace(&mut rng, &mut tokens, i)).collect();
    let runs = generated
        .iter()
        .enumerate()
        .map(|(i, g)| replay(&g.session, &g.clock, SEED + i as u64).expect("generated clocks are valid"))
        .collect();
    Traces { generated, runs, elapsed: started.elapsed() }
}

fn delay_suite(traces: &Traces) -> Outcome {
    let started = Instant::now();
    let mut violations = Vec::new();
    let mut due_records = 0usize;
    let mut exact_boundary = 0usize;
    let mut probes = 0usize;
    for (t, run) in traces.runs.iter().enumerate() {
        for entry in &run.trace {
            let (Some(BatchKind::Due), Some(batch)) = (entry.batch_kind, &entry.batch) else { continue };
            for record in &batch.batch.records {
                due_records += 1;
                let age =
                    entry.now.seconds_since(record.timestamp.expect("captured records carry their start"));
                if age < DAY {
                    violations.push(format!("trace {t} step {}: age {age}s", entry.step));
                }
                if age == DAY {
                    exact_boundary += 1;
                }
            }
        }
        if let Some((_, at_day)) = traces.generated[t].probe {
            let first = &run.opened[0];
            let sent =
                run.trace[at_day].batch.as_ref().is_some_and(|b| b.conversation_ids().any(|id| id == first));
            probes += usize::from(sent);
        }
    }

    // Isolated boundary: one conversation, ticks one second before and at
    // exactly one day.
    let session = Session {
        user_id: Some("boundary".into()),
        config: None,
        start: ts(1_700_000_000),
        terms_accepted: true,
        steps: vec![
            Step::Observe {
                url: "https://chat.example.org/c/b".into(),
                turns: vec![Turn::new(Role::User, "hello")],
            },
            Step::Tick { deliver: true },
            Step::Tick { deliver: true },
        ],
    };
    let clock = [
        ClockEntry { before_step: 1, at: Some(ts(1_700_000_000 + DAY - 1)), advance_secs: None },
        ClockEntry { before_step: 2, at: Some(ts(1_700_000_000 + DAY)), advance_secs: None },
    ];
    let isolated = replay(&session, &clock, 0).unwrap();
    let isolated_ok =
        isolated.trace[1].batch.is_none() && isolated.trace[2].batch_kind == Some(BatchKind::Due);

    let elapsed = traces.elapsed + started.elapsed();
    Outcome {
        name: "delay invariant",
        pass: violations.is_empty()
            && exact_boundary > 0
            && probes > 0
            && isolated_ok
            && elapsed < DELAY_LIMIT,
        detail: format!(
            "{TRACES} traces, {due_records} due records, {} early, {exact_boundary} sent at exactly 24h \
             ({probes} boundary probes), isolated boundary {}, {:.2?} (limit {DELAY_LIMIT:?}){}",
            violations.len(),
            if isolated_ok { "ok" } else { "WRONG" },
            elapsed,
            violations.first().map(|v| format!("; first: {v}")).unwrap_or_default(),
        ),
    }
}

/// Every fixed-width token of `needles` found in `haystack`.
fn scan<'a>(haystack: &[u8], needles: &'a HashSet<String>) -> Vec<&'a str> {
    if haystack.len() < TOKEN_LEN {
        return Vec::new();
    }
    let mut hits = BTreeSet::new();
    for window in haystack.windows(TOKEN_LEN) {
        if window[0] == b'z' {
            if let Ok(text) = std::str::from_utf8(window) {
                if let Some(hit) = needles.get(text) {
                    hits.insert(hit.as_str());
                }
            }
        }
    }
    hits.into_iter().collect()
}

/// Captured content per conversation, and what each successful deletion
/// must keep out of everything sent afterwards.
fn deleted_content(run: &Replay) -> Vec<(usize, HashSet<String>)> {
    let mut captured: BTreeMap<String, (usize, HashSet<String>)> = BTreeMap::new();
    let mut deletions = Vec::new();
    for entry in &run.trace {
        if let Step::Observe { turns, .. } = &entry.input {
            for event in &entry.events {
                match event {
                    StoreEvent::Opened { id, .. } => {
                        captured.entry(id.clone()).or_insert_with(|| (entry.step, HashSet::new()));
                    }
                    // Appends always take the tail of the page.
                    StoreEvent::Appended { id, count, .. } => {
                        let slot = &mut captured.get_mut(id).expect("opened before appended").1;
                        for turn in &turns[turns.len() - count..] {
                            slot.insert(token_of(&turn.text).to_string());
                        }
                    }
                    _ => {}
                }
            }
        }
        if let (Step::Delete { .. }, None, Some(id)) = (&entry.input, &entry.error, &entry.target) {
            let Some((_, own)) = captured.get(id) else { continue };
            // Text the user also has in another conversation that existed
            // before this deletion is not this deletion's content.
            let elsewhere: HashSet<&String> = captured
                .iter()
                .filter(|(other, (opened, _))| *other != id && *opened < entry.step)
                .flat_map(|(_, (_, toks))| toks)
                .collect();
            let secret: HashSet<String> = own.iter().filter(|t| !elsewhere.contains(t)).cloned().collect();
            deletions.push((entry.step, secret));
        }
    }
    deletions
}

async fn call(
    app: &axum::Router,
    method: &str,
    uri: &str,
    body: Vec<u8>,
    token: Option<&str>,
) -> (StatusCode, Vec<u8>) {
    let mut req = Request::builder().method(method).uri(uri).header("content-type", "application/json");
    if let Some(t) = token {
        req = req.header("authorization", format!("Bearer {t}"));
    }
    let resp = app.clone().oneshot(req.body(Body::from(body)).unwrap()).await.unwrap();
    let status = resp.status();
    (status, resp.into_body().collect().await.unwrap().to_bytes().to_vec())
}

fn server(dir: &Path) -> (axum::Router, AppState) {
    let state = AppState::new(Box::new(MemoryRepository::new()), IngestLimits::default(), dir.to_path_buf())
        .with_operator_token(Some(OPERATOR_TOKEN.into()))
        .with_clock(Arc::new(|| ts(1_800_000_000)));
    (router(state.clone()), state)
}

async fn export(app: &axum::Router) -> (Value, Vec<u8>) {
    let (status, body) = call(app, "POST", "/api/v1/releases/export", Vec::new(), Some(OPERATOR_TOKEN)).await;
    assert_eq!(status, StatusCode::OK, "{}", String::from_utf8_lossy(&body));
    let reply: Value = serde_json::from_slice(&body).unwrap();
    let data = std::fs::read(reply["data_file"].as_str().unwrap()).unwrap();
    let manifest = std::fs::read(reply["manifest_file"].as_str().unwrap()).unwrap();
    let mut files = data;
    files.extend_from_slice(&manifest);
    files.extend_from_slice(&body);
    (reply, files)
}

async fn privacy_suite(traces: &Traces) -> Outcome {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let (app, _) = server(dir.path());

    let mut leaks = Vec::new();
    let mut all_deleted: HashSet<String> = HashSet::new();
    let mut deletions = 0usize;
    let mut delivered: HashSet<String> = HashSet::new();
    let mut payload_bytes = 0usize;
    let mut upload_errors = 0usize;

    for (t, run) in traces.runs.iter().enumerate() {
        let secrets = deleted_content(run);
        deletions += secrets.len();
        for entry in &run.trace {
            let Some(batch) = &entry.batch else { continue };
            let body = serde_json::to_vec(&batch.batch).unwrap();
            for (deleted_at, secret) in &secrets {
                if entry.step > *deleted_at {
                    for hit in scan(&body, secret) {
                        leaks.push(format!("trace {t} step {} batch carries {hit}", entry.step));
                    }
                }
            }
            if !entry.acknowledged.is_empty() {
                for record in &batch.batch.records {
                    for m in &record.conversation {
                        delivered.insert(token_of(&m.text).to_string());
                    }
                }
                payload_bytes += body.len();
                let (status, reply) = call(&app, "POST", "/api/v1/conversations", body.clone(), None).await;
                if status != StatusCode::OK {
                    upload_errors += 1;
                }
                for (_, secret) in &secrets {
                    for hit in scan(&body, secret).into_iter().chain(scan(&reply, secret)) {
                        leaks.push(format!("trace {t} step {} upload carries {hit}", entry.step));
                    }
                }
            }
        }
        all_deleted.extend(secrets.into_iter().flat_map(|(_, s)| s));
    }

    let (_, release) = export(&app).await;
    for hit in scan(&release, &all_deleted) {
        leaks.push(format!("release carries {hit}"));
    }
    // The scan must see what was legitimately published.
    let found = scan(&release, &delivered).len();

    let elapsed = traces.elapsed + started.elapsed();
    Outcome {
        name: "privacy and deletion",
        pass: leaks.is_empty()
            && deletions > 0
            && upload_errors == 0
            && found == delivered.len()
            && elapsed < PRIVACY_LIMIT,
        detail: format!(
            "{TRACES} traces, {deletions} deletions covering {} texts, {} leaks, {upload_errors} failed uploads, \
             {payload_bytes} payload bytes, release scan found {found}/{} published texts, {:.2?} (limit {PRIVACY_LIMIT:?}){}",
            all_deleted.len(),
            leaks.len(),
            delivered.len(),
            elapsed,
            leaks.first().map(|l| format!("; first: {l}")).unwrap_or_default(),
        ),
    }
}

// ---------------------------------------------------------------------------
// Replay oracle

fn page_step(url: &str, page: &[String]) -> Step {
    Step::Observe {
        url: url.into(),
        turns: page.iter().enumerate().map(|(i, t)| Turn::new(role_at(i), t.clone())).collect(),
    }
}

fn replay_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x0AC1E);
    let start = ts(1_700_000_000);
    let mut grow_failures = 0;
    for s in 0..GROW_SESSIONS {
        let texts: Vec<String> = (0..rng.random_range(1..15)).map(|i| format!("s{s} turn {i}")).collect();
        let mut cuts: Vec<usize> =
            (0..rng.random_range(1..20)).map(|_| rng.random_range(1..=texts.len())).collect();
        cuts.sort_unstable();
        let steps = cuts.iter().map(|&c| page_step("https://chat.example.org/c/g", &texts[..c])).collect();
        let session = Session { user_id: Some("g".into()), config: None, start, terms_accepted: true, steps };
        let run = replay(&session, &[], 0).unwrap();
        let expected: Vec<(Role, &str)> = texts[..*cuts.last().unwrap()]
            .iter()
            .enumerate()
            .map(|(i, t)| (role_at(i), t.as_str()))
            .collect();
        let got: Vec<(Role, &str)> = run
            .store
            .active_id()
            .and_then(|id| run.store.get(id))
            .map(|c| c.messages.iter().map(|m| (m.role, m.text.as_str())).collect())
            .unwrap_or_default();
        if got != expected || run.store.conversations.len() != 1 {
            grow_failures += 1;
        }
    }

    #[derive(Clone, Copy, PartialEq, Debug)]
    enum Class {
        New,
        Continue,
        Same,
    }
    let mut steps_checked = 0;
    let mut edit_failures = 0;
    for s in 0..EDIT_SESSIONS {
        let mut fresh = 0;
        let mut next = || {
            fresh += 1;
            format!("e{s} text {fresh}")
        };
        let mut page = vec![next()];
        let mut url = "https://chat.example.org/c/a";
        let mut pages = Vec::new();
        let mut steps = Vec::new();
        for _ in 0..rng.random_range(1..30) {
            match rng.random_range(0..7) {
                0..4 => (0..rng.random_range(1..4)).for_each(|_| page.push(next())),
                4 => page = vec![next()],
                5 => {
                    page.truncate(rng.random_range(0..=page.len()));
                    page.push(next());
                }
                _ => {
                    url = if url.ends_with('a') {
                        "https://chat.example.org/c/b"
                    } else {
                        "https://chat.example.org/c/a"
                    }
                }
            }
            pages.push((url.to_string(), page.clone()));
            steps.push(page_step(url, &page));
        }
        let session = Session { user_id: Some("e".into()), config: None, start, terms_accepted: true, steps };
        let run = replay(&session, &[], 0).unwrap();
        // Rebuild oracle: compare each page with the last captured one.
        let mut prev: Option<(String, Vec<String>)> = None;
        for (entry, (url, page)) in run.trace.iter().zip(&pages) {
            let expected = match &prev {
                None => Class::New,
                Some((_, captured)) if captured == page => Class::Same,
                Some((u, captured))
                    if u == url && page.len() > captured.len() && page.starts_with(captured) =>
                {
                    Class::Continue
                }
                Some(_) => Class::New,
            };
            let got = if entry.events.iter().any(|e| matches!(e, StoreEvent::Opened { .. })) {
                Class::New
            } else if entry.events.iter().any(|e| matches!(e, StoreEvent::Appended { .. })) {
                Class::Continue
            } else {
                Class::Same
            };
            steps_checked += 1;
            if got != expected {
                edit_failures += 1;
            }
            if expected != Class::Same {
                prev = Some((url.clone(), page.clone()));
            }
        }
    }
    Outcome {
        name: "replay oracle",
        pass: grow_failures == 0 && edit_failures == 0,
        detail: format!(
            "{GROW_SESSIONS} grow-only sessions, {grow_failures} differ from the final snapshot; \
             {EDIT_SESSIONS} reset/edit sessions, {edit_failures}/{steps_checked} steps disagree with the rebuild oracle"
        ),
    }
}

// ---------------------------------------------------------------------------
// Anonymizer

const DICTIONARY_NAMES: [&str; 9] =
    ["Jennifer", "Margaret", "Robert", "Patricia", "Kimberly", "Gonzalez", "Smith", "Johnson", "Garcia"];
/// Capitalized words that are not person names here and must survive.
const CLEAN_WORDS: [&str; 30] = [
    "the", "model", "answered", "quickly", "and", "then", "we", "talked", "about", "weather", "Tuesday",
    "Python", "release", "notes", "version", "3.12", "costs", "42", "dollars", "Brown", "Miller", "Taylor",
    "White", "Walker", "Young", "King", "Hill", "Green", "Baker", "Carter",
];
const STREETS: [&str; 5] = ["Maple", "Oak", "Sunset", "Lincoln", "Cedar"];
const SUFFIXES: [&str; 5] = ["Street", "Ave", "Road", "Blvd", "Lane"];

fn letters(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> String {
    (0..rng.random_range(lo..=hi)).map(|_| (b'a' + rng.random_range(0..26)) as char).collect()
}

fn entity(rng: &mut ChaCha8Rng) -> (EntityKind, String) {
    match rng.random_range(0..7) {
        0 => {
            let tld = ["com", "org", "net", "io"].choose(rng).unwrap();
            (
                EntityKind::Email,
                format!("{}.{}@{}.{tld}", letters(rng, 2, 8), letters(rng, 1, 5), letters(rng, 2, 8)),
            )
        }
        1 => {
            let (a, b, c) =
                (rng.random_range(200..999), rng.random_range(200..999), rng.random_range(1000..9999));
            let text = match rng.random_range(0..4) {
                0 => format!("({a}) {b}-{c}"),
                1 => format!("{a}-{b}-{c}"),
                2 => format!("{a}.{b}.{c}"),
                _ => format!("+1 {a} {b} {c}"),
            };
            (EntityKind::Phone, text)
        }
        2 => {
            let o: [u8; 4] =
                [rng.random_range(1..=254), rng.random(), rng.random(), rng.random_range(1..=254)];
            (EntityKind::IpAddress, format!("{}.{}.{}.{}", o[0], o[1], o[2], o[3]))
        }
        3 => (EntityKind::PersonName, DICTIONARY_NAMES.choose(rng).unwrap().to_string()),
        4 => {
            let n = rng.random_range(1..99_999);
            let (w, s) = (STREETS.choose(rng).unwrap(), SUFFIXES.choose(rng).unwrap());
            (EntityKind::StreetAddress, format!("{n} {w} {s}"))
        }
        5 => (EntityKind::IdNumber, rng.random_range(100_000_000u64..999_999_999_999).to_string()),
        _ => {
            let host = letters(rng, 3, 8);
            (
                EntityKind::UrlWithUserinfo,
                format!("https://{}:{}@{host}.example.com/x", letters(rng, 3, 6), letters(rng, 4, 8)),
            )
        }
    }
}

fn clean_sentence(rng: &mut ChaCha8Rng) -> String {
    let words: Vec<&str> = (0..rng.random_range(1..12)).map(|_| *CLEAN_WORDS.choose(rng).unwrap()).collect();
    words.join(" ")
}

fn anonymizer_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xA11A);
    let mut seeded = 0;
    let mut missed = Vec::new();
    let mut not_idempotent = 0;
    let mut clean_changed = Vec::new();
    for _ in 0..ANON_DOCS {
        let mut text = String::new();
        let mut spans = Vec::new();
        for _ in 0..rng.random_range(1..6) {
            text.push_str(&clean_sentence(&mut rng));
            text.push(' ');
            let (kind, surface) = entity(&mut rng);
            spans.push((kind, text.len(), surface.clone()));
            text.push_str(&surface);
            text.push_str(" . ");
        }
        text.push_str("bye");
        let result = scrub_text(&text, &mut PlaceholderRegistry::new());
        for (kind, start, surface) in &spans {
            seeded += 1;
            let end = start + surface.len();
            let covered =
                result.entities.iter().any(|e| e.start <= *start && end <= e.end && e.kind == *kind);
            if !covered || result.scrubbed_text.contains(surface.as_str()) {
                missed.push(format!("{kind:?} {surface:?}"));
            }
        }
        let again = scrub_text(&result.scrubbed_text, &mut PlaceholderRegistry::new()).scrubbed_text;
        if again != result.scrubbed_text {
            not_idempotent += 1;
        }

        let clean = clean_sentence(&mut rng);
        let out = scrub_text(&clean, &mut PlaceholderRegistry::new()).scrubbed_text;
        if out.as_bytes() != clean.as_bytes() {
            clean_changed.push(clean);
        }
    }
    let recall = (seeded - missed.len()) as f64 / seeded as f64;
    Outcome {
        name: "anonymizer recall",
        pass: missed.is_empty() && not_idempotent == 0 && clean_changed.is_empty(),
        detail: format!(
            "{ANON_DOCS} documents, {seeded} seeded entities, recall {recall:.4}, {not_idempotent} not idempotent, \
             {} clean texts changed{}{}",
            clean_changed.len(),
            missed.first().map(|m| format!("; first miss: {m}")).unwrap_or_default(),
            clean_changed.first().map(|c| format!("; first changed: {c:?}")).unwrap_or_default(),
        ),
    }
}

// ---------------------------------------------------------------------------
// Ingestion

fn plugin_record(n: usize, user: &str, text: &str) -> UnifiedRecord {
    let mut r = UnifiedRecord::new(
        format!("00000000-0000-4000-8000-{n:012}"),
        PLUGIN_SOURCE,
        messages_from_turns([(Role::User, text), (Role::Model, "ok")]),
    );
    r.user_id = Some(user.into());
    r.model_name = Some("acme/chat-7b".into());
    r
}

async fn ingestion_suite() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let (app, state) = server(dir.path());
    let keep_user = "0b1c2d3e-0000-4000-8000-000000000001";
    let leave_user = "0b1c2d3e-0000-4000-8000-000000000002";
    let batch: Vec<_> =
        (0..INGEST_BATCH).map(|n| plugin_record(n, keep_user, &format!("kept {n}"))).collect();
    let body = serde_json::to_vec(&json!({"records": batch, "user_id": keep_user})).unwrap();
    let mut statuses = Vec::new();
    for _ in 0..INGEST_REPEATS {
        statuses.push(call(&app, "POST", "/api/v1/conversations", body.clone(), None).await.0);
    }
    let count_after_repeats = state.repo().count().unwrap();

    let theirs: Vec<_> = (0..REMOVAL_CONVERSATIONS)
        .map(|n| plugin_record(10_000 + n, leave_user, &format!("zqremove{n:03} private words")))
        .collect();
    let body = serde_json::to_vec(&json!({"records": theirs, "user_id": leave_user})).unwrap();
    statuses.push(call(&app, "POST", "/api/v1/conversations", body, None).await.0);

    let removal = json!({"kind": "self_removal", "claimed_user_id": leave_user});
    let (removal_status, ticket) =
        call(&app, "POST", "/api/v1/removal-requests", serde_json::to_vec(&removal).unwrap(), None).await;
    let ticket: Value = serde_json::from_slice(&ticket).unwrap();

    let retrievable = {
        let repo = state.repo();
        theirs
            .iter()
            .filter(|r| repo.get(&r.conversation_id).unwrap().and_then(|row| row.record).is_some())
            .count()
    };
    let (reply, files) = export(&app).await;
    let manifest_count = reply["manifest"]["record_count"].as_u64().unwrap_or(u64::MAX);
    let leaked = String::from_utf8_lossy(&files).contains("zqremove");

    let all_ok = statuses.iter().all(|s| *s == StatusCode::OK) && removal_status == StatusCode::OK;
    Outcome {
        name: "ingestion idempotence and removal",
        pass: all_ok
            && count_after_repeats == INGEST_BATCH
            && ticket["state"] == "executed"
            && retrievable == 0
            && manifest_count == INGEST_BATCH as u64
            && !leaked,
        detail: format!(
            "{INGEST_BATCH}-record batch posted {INGEST_REPEATS}x -> store count {count_after_repeats}; \
             removal {} of {REMOVAL_CONVERSATIONS} conversations, {retrievable} still retrievable; \
             export manifest {manifest_count} (expected {INGEST_BATCH}, tolerance 0), removed text in release: {leaked}",
            ticket["state"],
        ),
    }
}

// ---------------------------------------------------------------------------
// Unifier

const FAMILIES: [(&str, &str); 5] = [
    ("hh_rlhf", "pairwise_preference"),
    ("chatbot_arena", "arena_pairs"),
    ("prism", "survey_conversations"),
    ("wildchat", "survey_conversations"),
    ("sharelm_plugin", "plugin_native"),
];

fn unifier_suite() -> Outcome {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/unify");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("unified.jsonl");
    let inputs: Vec<(String, PathBuf)> =
        FAMILIES.iter().map(|(n, _)| (n.to_string(), fixtures.join(format!("{n}.jsonl")))).collect();
    let acknowledged = vec!["chatbot_arena".to_string(), "wildchat".to_string()];
    let registry = Registry::builtin();

    let started = Instant::now();
    let report = run_unify(&registry, &inputs, &out, None, &acknowledged);
    let elapsed = started.elapsed();
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            return Outcome { name: "unifier conservation", pass: false, detail: format!("run failed: {e}") }
        }
    };

    let mut problems = Vec::new();
    // Independent recount: non-blank input lines per source, and the output
    // file re-read from disk.
    let mut family_rows: BTreeMap<&str, u64> = BTreeMap::new();
    for (name, family) in FAMILIES {
        let text = std::fs::read_to_string(fixtures.join(format!("{name}.jsonl"))).unwrap();
        let rows = text.lines().filter(|l| !l.trim().is_empty()).count() as u64;
        *family_rows.entry(family).or_default() += rows;
        let r = &report.per_source[name];
        if r.read != rows {
            problems.push(format!("{name}: read {} but file has {rows} rows", r.read));
        }
        if r.read != r.converted + r.skipped {
            problems.push(format!(
                "{name}: read {} != converted {} + skipped {}",
                r.read, r.converted, r.skipped
            ));
        }
    }
    for (family, rows) in &family_rows {
        if *rows < UNIFY_MIN_ROWS {
            problems.push(format!("{family}: only {rows} rows"));
        }
    }
    let output = std::fs::read_to_string(&out).unwrap();
    let mut ids = HashSet::new();
    let mut per_source: BTreeMap<String, u64> = BTreeMap::new();
    let mut models = BTreeSet::new();
    let mut invalid = 0;
    for line in output.lines() {
        match parse_record(line.as_bytes()) {
            Ok(record) => {
                if !validate_record(&record).valid {
                    invalid += 1;
                }
                if !ids.insert(record.conversation_id.clone()) {
                    problems.push(format!("duplicate id {}", record.conversation_id));
                }
                if let Some(m) = &record.model_name {
                    models.insert(m.clone());
                }
                *per_source.entry(record.source).or_default() += 1;
            }
            Err(_) => invalid += 1,
        }
    }
    let lines = output.lines().count() as u64;
    if report.total_records != lines {
        problems.push(format!("report total {} vs {lines} output lines", report.total_records));
    }
    if report.distinct_models != models.len() as u64 {
        problems.push(format!("report models {} vs {} recounted", report.distinct_models, models.len()));
    }
    for (name, r) in &report.per_source {
        let written = per_source.get(name).copied().unwrap_or(0);
        if r.records - r.duplicates != written {
            problems.push(format!(
                "{name}: report {} - {} duplicates vs {written} written",
                r.records, r.duplicates
            ));
        }
    }
    if invalid > 0 {
        problems.push(format!("{invalid} output lines fail validation"));
    }
    let families: Vec<String> = family_rows.iter().map(|(f, n)| format!("{f}={n}")).collect();
    Outcome {
        name: "unifier conservation",
        pass: problems.is_empty() && elapsed < UNIFY_LIMIT,
        detail: format!(
            "rows per family [{}], {lines} records written, {} skipped rows, {} problems, {:.2?} (limit {UNIFY_LIMIT:?}){}",
            families.join(", "),
            report.skipped_rows.len(),
            problems.len(),
            elapsed,
            problems.first().map(|p| format!("; first: {p}")).unwrap_or_default(),
        ),
    }
}

// ---------------------------------------------------------------------------
// Serialization

fn text(rng: &mut ChaCha8Rng) -> String {
    const PIECES: [&str; 12] = [
        "hello",
        " ",
        "wörld",
        "\"quoted\"",
        "back\\slash",
        "\n",
        "\t",
        "emoji 🦀",
        "<tag>",
        "日本語",
        "x",
        "\u{2028}",
    ];
    let mut out: String = (0..rng.random_range(1..8)).map(|_| *PIECES.choose(rng).unwrap()).collect();
    if out.trim().is_empty() {
        out.push('x');
    }
    out
}

fn metadata(rng: &mut ChaCha8Rng) -> Metadata {
    (0..rng.random_range(0..4)).map(|i| (format!("k{i}_{}", letters(rng, 1, 4)), text(rng))).collect()
}

fn random_record(rng: &mut ChaCha8Rng, n: usize) -> UnifiedRecord {
    let messages: Vec<Message> =
        (0..rng.random_range(1..7)).map(|i| Message::new(i as u32, role_at(i), text(rng))).collect();
    let mut r = UnifiedRecord::new(format!("rec-{n}-{}", letters(rng, 1, 6)), letters(rng, 3, 10), messages);
    if rng.random_bool(0.5) {
        r.model_name = Some(format!("org/{}", letters(rng, 2, 8)));
    }
    if rng.random_bool(0.5) {
        r.user_id = Some(format!("{:08x}-0000-4000-8000-{:012x}", rng.random::<u32>(), n));
    }
    if rng.random_bool(0.5) {
        r.timestamp = Some(ts(rng.random_range(0..4_000_000_000)));
    }
    if r.conversation.len() > 1 && rng.random_bool(0.3) {
        let rating = if rng.random_bool(0.5) { Rating::ThumbsUp } else { Rating::ThumbsDown };
        r.conversation[1].response_rating = Some(rating);
    }
    r.user_metadata = metadata(rng);
    r.conversation_metadata = metadata(rng);
    r
}

fn roundtrip_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x5E71);
    let mut invalid = 0;
    let mut first_invalid = None;
    let mut mismatched = 0;
    let mut bad_keys = 0;
    for n in 0..ROUNDTRIP_RECORDS {
        let record = random_record(&mut rng, n);
        let report = validate_record(&record);
        if !report.valid {
            invalid += 1;
            first_invalid.get_or_insert(report.summary());
            continue;
        }
        let line = serialize_record(&record).unwrap();
        if parse_record(line.as_bytes()).ok().as_ref() != Some(&record) {
            mismatched += 1;
        }
        // Key order as written, read without a schema.
        let keys: Vec<String> = serde_json::from_str::<serde_json::Map<String, Value>>(&line)
            .map(|m| m.keys().cloned().collect())
            .unwrap_or_default();
        let in_text: Vec<usize> =
            FIELD_NAMES.iter().filter_map(|k| line.find(&format!("\"{k}\":"))).collect();
        let ordered = in_text.len() == FIELD_NAMES.len() && in_text.windows(2).all(|w| w[0] < w[1]);
        let mut expected: Vec<&str> = FIELD_NAMES.to_vec();
        expected.sort_unstable();
        let mut got: Vec<&str> = keys.iter().map(String::as_str).collect();
        got.sort_unstable();
        if got != expected || !ordered {
            bad_keys += 1;
        }
    }
    Outcome {
        name: "serialization round trip",
        pass: invalid == 0 && mismatched == 0 && bad_keys == 0,
        detail: format!(
            "{ROUNDTRIP_RECORDS} records, {invalid} generated invalid, {mismatched} changed by the round trip, \
             {bad_keys} with wrong or misordered field names{}",
            first_invalid.map(|v| format!("; first invalid: {v}")).unwrap_or_default(),
        ),
    }
}

fn main() {
    let runtime = tokio::runtime::Builder::new_current_thread().enable_all().build().unwrap();
    let traces = run_traces();
    let outcomes = vec![
        delay_suite(&traces),
        runtime.block_on(privacy_suite(&traces)),
        replay_oracle(),
        anonymizer_suite(),
        runtime.block_on(ingestion_suite()),
        unifier_suite(),
        roundtrip_suite(),
    ];
    let mut failed = 0;
    for o in &outcomes {
        println!("{} {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.name, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", outcomes.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
