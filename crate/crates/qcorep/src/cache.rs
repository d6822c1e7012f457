//! Result cache for computed corepresentation matrices.
//!
//! One JSON file per (schema version, N, k), stored under a per-user data
//! directory unless overridden. The payload is wrapped in an envelope with
//! a SHA-256 checksum; an entry that fails any validation step is ignored
//! and recomputed, never trusted. Writes land in a temporary file in the
//! destination directory and are renamed into place, so a crashed writer
//! cannot leave a readable-but-wrong entry behind.
//!
//! Resolution order for the cache directory: the `QCOREP_CACHE_DIR`
//! environment variable, then an explicit `--cache-dir` style override,
//! then `$XDG_DATA_HOME/qcorep` (falling back to `~/.local/share/qcorep`).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::corep::CorepMatrix;
use crate::error::Result;
use crate::serialize::{corep_from_value, corep_to_value, SCHEMA_VERSION};

/// Picks the cache directory given an optional command-line override.
pub fn resolve_cache_dir(flag: Option<&Path>) -> PathBuf {
    if let Ok(dir) = std::env::var("QCOREP_CACHE_DIR") {
        if !dir.is_empty() {
            return PathBuf::from(dir);
        }
    }
    if let Some(dir) = flag {
        return dir.to_path_buf();
    }
    if let Ok(dir) = std::env::var("XDG_DATA_HOME") {
        if !dir.is_empty() {
            return PathBuf::from(dir).join("qcorep");
        }
    }
    if let Ok(home) = std::env::var("HOME") {
        if !home.is_empty() {
            return PathBuf::from(home).join(".local/share/qcorep");
        }
    }
    std::env::temp_dir().join("qcorep")
}

/// File path for the (N, k) entry under `dir`.
pub fn cache_file(dir: &Path, n: u8, k: u32) -> PathBuf {
    dir.join(format!("v{SCHEMA_VERSION}-n{n}-k{k}.json"))
}

fn payload_checksum(payload_text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(payload_text.as_bytes());
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Loads the cached matrix for (N, k), or `None` if the entry is missing,
/// unreadable, corrupt, or inconsistent with the requested key.
pub fn load(dir: &Path, n: u8, k: u32) -> Option<CorepMatrix> {
    let text = fs::read_to_string(cache_file(dir, n, k)).ok()?;
    let envelope: Value = serde_json::from_str(&text).ok()?;
    let stored_checksum = envelope.get("checksum")?.as_str()?;
    let payload = envelope.get("payload")?;
    let payload_text = serde_json::to_string_pretty(payload).ok()?;
    if payload_checksum(&payload_text) != stored_checksum {
        return None;
    }
    let t = corep_from_value(payload).ok()?;
    if t.n() != n || t.k() != k {
        return None;
    }
    Some(t)
}

/// Atomically stores the matrix under its (N, k) key.
pub fn store(dir: &Path, t: &CorepMatrix) -> Result<()> {
    fs::create_dir_all(dir)?;
    let payload = corep_to_value(t);
    let payload_text = serde_json::to_string_pretty(&payload).expect("payload serializes");
    let mut envelope = Map::new();
    envelope.insert("checksum".into(), Value::String(payload_checksum(&payload_text)));
    envelope.insert("payload".into(), payload);
    let mut text = serde_json::to_string_pretty(&Value::Object(envelope)).expect("envelope serializes");
    text.push('\n');

    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.flush()?;
    tmp.persist(cache_file(dir, t.n(), t.k()))
        .map_err(|e| crate::error::Error::from(e.error))?;
    Ok(())
}
