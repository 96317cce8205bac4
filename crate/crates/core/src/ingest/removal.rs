use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{ConversationRepository, IngestError, StoredStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemovalKind {
    /// The owner asks to remove their own conversations.
    SelfRemoval,
    /// Someone flags conversations that break the terms of use.
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemovalState {
    Received,
    Verified,
    Rejected,
    Executed,
}

/// What a client posts to the removal endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RemovalRequestBody {
    pub kind: RemovalKind,
    #[serde(default)]
    pub claimed_user_id: Option<String>,
    #[serde(default)]
    pub target_conversation_ids: Option<Vec<String>>,
    #[serde(default)]
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalRequest {
    pub request_id: String,
    pub kind: RemovalKind,
    pub claimed_user_id: Option<String>,
    pub target_conversation_ids: Option<Vec<String>>,
    pub reason: String,
    pub state: RemovalState,
}

impl RemovalRequest {
    pub fn received(request_id: String, body: RemovalRequestBody) -> Self {
        RemovalRequest {
            request_id,
            kind: body.kind,
            claimed_user_id: body.claimed_user_id,
            target_conversation_ids: body.target_conversation_ids,
            reason: body.reason,
            state: RemovalState::Received,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestTicket {
    pub request_id: String,
    pub kind: RemovalKind,
    pub state: RemovalState,
    /// Conversations removed (self removal) or quarantined (report).
    pub affected: Vec<String>,
    pub not_found: Vec<String>,
    /// Targets that exist but belong to another user.
    pub foreign: usize,
    pub detail: String,
}

impl RequestTicket {
    /// 404 when nothing to act on existed, 200 otherwise.
    pub fn http_status(&self) -> u16 {
        if self.affected.is_empty() && self.foreign == 0 && self.state == RemovalState::Rejected {
            404
        } else {
            200
        }
    }
}

/// Applies a removal request and returns its final state.
///
/// Self removal is all-or-nothing: if any existing target belongs to a
/// different user the request is rejected and nothing changes. Reports only
/// quarantine their targets; an operator decides later.
pub fn handle_removal_request<R: ConversationRepository + ?Sized>(
    repo: &mut R,
    mut request: RemovalRequest,
) -> Result<RequestTicket, IngestError> {
    repo.ping()?;
    let mut affected = Vec::new();
    let mut not_found = Vec::new();
    let mut foreign = 0;
    let detail: String;

    match request.kind {
        RemovalKind::SelfRemoval => {
            let claimed = request
                .claimed_user_id
                .clone()
                .filter(|u| !u.trim().is_empty())
                .ok_or_else(|| IngestError::Malformed("self_removal requires claimed_user_id".into()))?;
            let targets = match &request.target_conversation_ids {
                None => repo.ids_for_user(&claimed)?,
                Some(ids) => {
                    let mut owned = Vec::new();
                    for id in ids {
                        match repo.get(id)? {
                            None => not_found.push(id.clone()),
                            Some(row) if row.status == StoredStatus::Removed => {}
                            Some(row) if row.owner() == Some(claimed.as_str()) => owned.push(id.clone()),
                            Some(_) => foreign += 1,
                        }
                    }
                    owned
                }
            };
            if foreign > 0 {
                request.state = RemovalState::Rejected;
                detail = "user id does not own the targeted conversations".into();
            } else if targets.is_empty() {
                request.state = RemovalState::Rejected;
                detail = "no conversations of this user id were found".into();
            } else {
                for id in &targets {
                    if repo.set_status(id, StoredStatus::Removed)? {
                        affected.push(id.clone());
                    }
                }
                request.state = RemovalState::Executed;
                detail = "conversations removed from the store and future releases".into();
            }
        }
        RemovalKind::Report => {
            let ids =
                request.target_conversation_ids.clone().filter(|ids| !ids.is_empty()).ok_or_else(|| {
                    IngestError::Malformed("report requires target_conversation_ids".into())
                })?;
            for id in ids {
                match repo.get(&id)? {
                    None => not_found.push(id),
                    Some(row) if row.status == StoredStatus::Removed => not_found.push(id),
                    Some(row) => {
                        if row.status == StoredStatus::Active {
                            repo.set_status(&id, StoredStatus::Quarantined)?;
                        }
                        affected.push(id);
                    }
                }
            }
            if affected.is_empty() {
                request.state = RemovalState::Rejected;
                detail = "none of the reported conversations exist".into();
            } else {
                request.state = RemovalState::Verified;
                detail = "reported conversations quarantined pending operator review".into();
            }
        }
    }

    Ok(RequestTicket {
        request_id: request.request_id,
        kind: request.kind,
        state: request.state,
        affected,
        not_found,
        foreign,
        detail,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReviewDecision {
    /// Back into releases.
    Restore,
    /// Erase permanently.
    Remove,
}

/// Operator decision on a quarantined conversation. Returns false when the
/// id is not currently quarantined.
pub fn review_quarantined<R: ConversationRepository + ?Sized>(
    repo: &mut R,
    id: &str,
    decision: ReviewDecision,
) -> Result<bool, IngestError> {
    match repo.get(id)? {
        Some(row) if row.status == StoredStatus::Quarantined => {
            let status = match decision {
                ReviewDecision::Restore => StoredStatus::Active,
                ReviewDecision::Remove => StoredStatus::Removed,
            };
            Ok(repo.set_status(id, status)?)
        }
        _ => Ok(false),
    }
}
