//! Core logic for collecting, scrubbing, storing and unifying human–model
//! conversation data.
//!
//! The crate is `no_std` (with `alloc`). Everything that touches the
//! filesystem, the network or the wall clock lives in the `sharelm` crate;
//! here time is always passed in as a [`Timestamp`] and randomness through a
//! caller-supplied [`rand_core::RngCore`].
//!
//! * [`model`] — the unified record schema, validation and JSON-Lines codec.
//! * [`capture`] — the client-side capture state machine and delayed upload.
//! * [`anonymizer`] — rule-based PII scrubbing with stable placeholders.
//! * [`ingest`] — server-side intake, removal requests and staged releases.
//! * [`unifier`] — adapters that convert other conversation datasets.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod anonymizer;
pub mod capture;
pub mod ingest;
pub mod model;
pub mod time;
pub mod unifier;

pub use model::{
    parse_record, serialize_record, validate_record, Message, Rating, Role, UnifiedRecord, UserProfile,
    ValidationReport, Violation,
};
pub use time::Timestamp;

/// `source` value carried by every record captured through the plugin.
pub const PLUGIN_SOURCE: &str = "sharelm_plugin";
