//! Server configuration: a TOML file plus `SHARELM_*` environment overrides.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sharelm_core::ingest::IngestLimits;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ServerConfig {
    pub listen: String,
    pub store_path: PathBuf,
    pub release_dir: PathBuf,
    pub max_records: usize,
    pub max_bytes: usize,
    /// Bearer token for export; export is refused when unset.
    pub operator_token: Option<String>,
}

impl Default for ServerConfig {
    fn default() -> Self {
        let limits = IngestLimits::default();
        ServerConfig {
            listen: "127.0.0.1:8080".into(),
            store_path: "sharelm.db".into(),
            release_dir: "releases".into(),
            max_records: limits.max_records,
            max_bytes: limits.max_bytes,
            operator_token: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {0}: {1}")]
    Read(String, std::io::Error),
    #[error("invalid config {0}: {1}")]
    Parse(String, toml::de::Error),
    #[error("invalid value for {0}: {1:?}")]
    Env(&'static str, String),
}

impl ServerConfig {
    pub fn limits(&self) -> IngestLimits {
        IngestLimits { max_records: self.max_records, max_bytes: self.max_bytes }
    }

    /// Defaults, then the file (if any), then the process environment.
    pub fn load(path: Option<&Path>) -> Result<Self, ConfigError> {
        let mut config = match path {
            Some(p) => {
                let text =
                    std::fs::read_to_string(p).map_err(|e| ConfigError::Read(p.display().to_string(), e))?;
                toml::from_str(&text).map_err(|e| ConfigError::Parse(p.display().to_string(), e))?
            }
            None => ServerConfig::default(),
        };
        config.apply_env(|key| std::env::var(key).ok())?;
        Ok(config)
    }

    pub fn apply_env(&mut self, lookup: impl Fn(&str) -> Option<String>) -> Result<(), ConfigError> {
        if let Some(v) = lookup("SHARELM_LISTEN") {
            self.listen = v;
        }
        if let Some(v) = lookup("SHARELM_STORE_PATH") {
            self.store_path = v.into();
        }
        if let Some(v) = lookup("SHARELM_RELEASE_DIR") {
            self.release_dir = v.into();
        }
        if let Some(v) = lookup("SHARELM_MAX_RECORDS") {
            self.max_records = v.parse().map_err(|_| ConfigError::Env("SHARELM_MAX_RECORDS", v))?;
        }
        if let Some(v) = lookup("SHARELM_MAX_BYTES") {
            self.max_bytes = v.parse().map_err(|_| ConfigError::Env("SHARELM_MAX_BYTES", v))?;
        }
        if let Some(v) = lookup("SHARELM_OPERATOR_TOKEN") {
            self.operator_token = Some(v).filter(|t| !t.is_empty());
        }
        Ok(())
    }
}
