//! IO side of ShareLM: local store files, the SQLite-backed ingestion
//! server, the capture session simulator and the dataset unifier driver.
//! All protocol logic lives in [`sharelm_core`].

pub mod config;
pub mod fsio;
pub mod server;
pub mod sim;
pub mod sqlite;
pub mod unify_io;

pub use sharelm_core as core;
