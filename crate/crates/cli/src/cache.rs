//! On-disk result cache, enabled by pointing `SUPERCHAR_CACHE` at a
//! directory. Entries are keyed by the SHA-256 of the canonical request and
//! written through a temporary file and a rename, so a reader never sees a
//! partial entry. Unreadable or malformed entries count as misses.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub exit: i32,
    pub json: serde_json::Value,
    pub latex: Option<String>,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn from_env() -> Option<Cache> {
        let dir = std::env::var_os("SUPERCHAR_CACHE")?;
        if dir.is_empty() {
            return None;
        }
        Some(Cache { dir: dir.into() })
    }

    pub fn key(request: &serde_json::Value) -> String {
        let mut h = Sha256::new();
        h.update(env!("CARGO_PKG_VERSION").as_bytes());
        h.update([0]);
        h.update(request.to_string().as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<Entry> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Best effort: a cache that cannot be written is skipped silently.
    pub fn put(&self, key: &str, entry: &Entry) {
        let _ = self.try_put(key, entry);
    }

    fn try_put(&self, key: &str, entry: &Entry) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = temp_name(&self.dir, key);
        {
            let mut file = fs::File::create(&tmp)?;
            file.write_all(serde_json::to_string(entry)?.as_bytes())?;
            file.sync_all()?;
        }
        let done = fs::rename(&tmp, self.path(key));
        if done.is_err() {
            let _ = fs::remove_file(&tmp);
        }
        done
    }
}

fn temp_name(dir: &Path, key: &str) -> PathBuf {
    let nanos = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.subsec_nanos())
        .unwrap_or(0);
    dir.join(format!(".{key}.{}.{nanos}.tmp", std::process::id()))
}
