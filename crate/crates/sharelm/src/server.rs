//! HTTP API of the ingestion service.

use std::path::PathBuf;
use std::sync::{Arc, Mutex, MutexGuard};

use axum::body::Bytes;
use axum::extract::{DefaultBodyLimit, State};
use axum::http::{header, HeaderMap, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Serialize;
use serde_json::json;
use sharelm_core::capture::uuid_from_bytes;
use sharelm_core::ingest::{
    build_release, decode_upload, get_health, handle_removal_request, handle_upload, ConversationRepository,
    IngestError, IngestLimits, MemoryRepository, ReleaseFilter, ReleaseManifest, RemovalRequest,
    RemovalRequestBody, RequestTicket, StoreError,
};
use sharelm_core::Timestamp;

use crate::fsio::write_atomic;
use crate::sqlite::SqliteRepository;

/// A repository the service can run on.
pub trait Backend: ConversationRepository + Send {
    fn record_ticket(&mut self, _ticket: &RequestTicket) -> Result<(), StoreError> {
        Ok(())
    }
}

impl Backend for MemoryRepository {}

impl Backend for SqliteRepository {
    fn record_ticket(&mut self, ticket: &RequestTicket) -> Result<(), StoreError> {
        SqliteRepository::record_ticket(self, ticket)
    }
}

pub type Clock = Arc<dyn Fn() -> Timestamp + Send + Sync>;

pub fn system_clock() -> Clock {
    Arc::new(|| {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs() as i64)
            .unwrap_or(0);
        Timestamp::from_unix_seconds(secs).unwrap_or(Timestamp::UNIX_EPOCH)
    })
}

#[derive(Clone)]
pub struct AppState {
    repo: Arc<Mutex<Box<dyn Backend>>>,
    limits: IngestLimits,
    operator_token: Option<String>,
    release_dir: PathBuf,
    clock: Clock,
}

impl AppState {
    pub fn new(repo: Box<dyn Backend>, limits: IngestLimits, release_dir: PathBuf) -> Self {
        AppState {
            repo: Arc::new(Mutex::new(repo)),
            limits,
            operator_token: None,
            release_dir,
            clock: system_clock(),
        }
    }

    pub fn with_operator_token(mut self, token: Option<String>) -> Self {
        self.operator_token = token;
        self
    }

    pub fn with_clock(mut self, clock: Clock) -> Self {
        self.clock = clock;
        self
    }

    /// Direct access to the store, e.g. for operator commands in-process.
    pub fn repo(&self) -> MutexGuard<'_, Box<dyn Backend>> {
        // A panic while holding the lock cannot leave a row half-written:
        // every repository call is atomic on its own.
        self.repo.lock().unwrap_or_else(|e| e.into_inner())
    }
}

pub fn router(state: AppState) -> Router {
    // One byte of slack so bodies just over the limit get the JSON 413
    // from the decoder rather than the framework's plain-text one.
    let body_limit = state.limits.max_bytes.saturating_add(1);
    Router::new()
        .route("/api/v1/conversations", post(upload))
        .route("/api/v1/removal-requests", post(removal))
        .route("/api/v1/health", get(health))
        .route("/api/v1/releases/export", post(export))
        .layer(DefaultBodyLimit::max(body_limit))
        .with_state(state)
}

fn status(code: u16) -> StatusCode {
    StatusCode::from_u16(code).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR)
}

fn reply<T: Serialize>(code: u16, body: &T) -> Response {
    (status(code), Json(body)).into_response()
}

fn error_reply(err: &IngestError) -> Response {
    if let IngestError::Store(e) = err {
        tracing::warn!(error = %e, "store failure");
    }
    reply(err.http_status(), &json!({ "error": err.to_string() }))
}

async fn upload(State(state): State<AppState>, body: Bytes) -> Response {
    let batch = match decode_upload(&body, &state.limits) {
        Ok(batch) => batch,
        Err(e) => return error_reply(&e),
    };
    let now = (state.clock)();
    let result = handle_upload(&mut **state.repo(), &batch, now);
    match result {
        Ok(ack) => {
            tracing::info!(accepted = ack.accepted.len(), rejected = ack.rejected.len(), "upload");
            reply(ack.http_status(), &ack)
        }
        Err(e) => error_reply(&e),
    }
}

fn new_request_id() -> String {
    let bytes: [u8; 16] = rand::random();
    uuid_from_bytes(bytes)
}

async fn removal(State(state): State<AppState>, body: Bytes) -> Response {
    let body: RemovalRequestBody = match serde_json::from_slice(&body) {
        Ok(b) => b,
        Err(e) => return error_reply(&IngestError::Malformed(e.to_string())),
    };
    let request = RemovalRequest::received(new_request_id(), body);
    let mut repo = state.repo();
    let ticket = match handle_removal_request(&mut **repo, request) {
        Ok(t) => t,
        Err(e) => return error_reply(&e),
    };
    if let Err(e) = repo.record_ticket(&ticket) {
        return error_reply(&IngestError::Store(e));
    }
    tracing::info!(request = %ticket.request_id, state = ?ticket.state, "removal request");
    reply(ticket.http_status(), &ticket)
}

async fn health(State(state): State<AppState>) -> Response {
    let report = get_health(&**state.repo());
    let code = if report.is_ok() { 200 } else { 503 };
    reply(code, &report)
}

#[derive(Serialize)]
struct ExportReply {
    manifest: ReleaseManifest,
    data_file: String,
    manifest_file: String,
}

fn authorized(headers: &HeaderMap, token: Option<&str>) -> bool {
    let Some(token) = token else { return false };
    headers
        .get(header::AUTHORIZATION)
        .and_then(|v| v.to_str().ok())
        .and_then(|v| v.strip_prefix("Bearer "))
        .is_some_and(|given| given.trim() == token)
}

async fn export(State(state): State<AppState>, headers: HeaderMap, body: Bytes) -> Response {
    if !authorized(&headers, state.operator_token.as_deref()) {
        return error_reply(&IngestError::Unauthorized);
    }
    let filter: ReleaseFilter = if body.iter().all(u8::is_ascii_whitespace) {
        ReleaseFilter::default()
    } else {
        match serde_json::from_slice(&body) {
            Ok(f) => f,
            Err(e) => return error_reply(&IngestError::Malformed(e.to_string())),
        }
    };
    let now = (state.clock)();
    // Holding the lock for the whole read gives a consistent snapshot.
    let staged = match build_release(&**state.repo(), &filter, now) {
        Ok(s) => s,
        Err(e) => return error_reply(&e),
    };
    let data_path = state.release_dir.join(staged.data_file_name());
    let manifest_path = state.release_dir.join(staged.manifest_file_name());
    let manifest_text = serde_json::to_vec_pretty(&staged.manifest).expect("manifest serializes");
    let written = write_atomic(&data_path, staged.data().as_bytes())
        .and_then(|_| write_atomic(&manifest_path, &manifest_text));
    if let Err(e) = written {
        tracing::error!(error = %e, "release write failed");
        return reply(500, &json!({ "error": format!("cannot write release: {e}") }));
    }
    tracing::info!(records = staged.manifest.record_count, file = %data_path.display(), "release exported");
    reply(
        200,
        &ExportReply {
            manifest: staged.manifest,
            data_file: data_path.display().to_string(),
            manifest_file: manifest_path.display().to_string(),
        },
    )
}
