//! Atomic file output and local store persistence.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use sharelm_core::capture::LocalStore;

/// Writes `bytes` to a temp file next to `path`, syncs it and renames it
/// into place, so readers see either the old or the new content.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// A writer whose content only appears at `path` after [`AtomicFile::commit`].
/// Dropping it without committing leaves `path` untouched.
pub struct AtomicFile {
    tmp: tempfile::NamedTempFile,
    path: std::path::PathBuf,
}

impl AtomicFile {
    pub fn create(path: &Path) -> io::Result<Self> {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        fs::create_dir_all(dir)?;
        Ok(AtomicFile { tmp: tempfile::NamedTempFile::new_in(dir)?, path: path.to_path_buf() })
    }

    pub fn commit(mut self) -> io::Result<()> {
        self.tmp.flush()?;
        self.tmp.as_file().sync_all()?;
        self.tmp.persist(&self.path).map_err(|e| e.error)?;
        Ok(())
    }
}

impl Write for AtomicFile {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.tmp.write(buf)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.tmp.flush()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum StoreFileError {
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path} is not a valid local store: {source}")]
    Format { path: String, source: serde_json::Error },
}

/// Reads a persisted store; `Ok(None)` when the file does not exist.
pub fn load_store(path: &Path) -> Result<Option<LocalStore>, StoreFileError> {
    let text = match fs::read(path) {
        Ok(text) => text,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(source) => return Err(StoreFileError::Io { path: path.display().to_string(), source }),
    };
    serde_json::from_slice(&text)
        .map(Some)
        .map_err(|source| StoreFileError::Format { path: path.display().to_string(), source })
}

pub fn save_store(path: &Path, store: &LocalStore) -> Result<(), StoreFileError> {
    let text = serde_json::to_vec_pretty(store).expect("store serializes");
    write_atomic(path, &text)
        .map_err(|source| StoreFileError::Io { path: path.display().to_string(), source })
}
