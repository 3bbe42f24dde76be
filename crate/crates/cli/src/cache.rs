//! On-disk result cache. Each entry is a payload file plus a small metadata
//! file holding the full key and the payload's SHA-256. Both are written to
//! a temporary name and renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

/// Version stamped into every key; entries from other versions are stale.
pub const CODE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub payload: PathBuf,
    pub checksum: String,
}

pub struct Cache {
    dir: PathBuf,
}

fn sha256_hex(data: &[u8]) -> String {
    hex::encode(Sha256::digest(data))
}

/// Writes `data` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, data: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("out");
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(data)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self, CliError> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn key(command: &str, params: &str) -> String {
        format!("{command}|{params}|v{CODE_VERSION}")
    }

    fn paths(&self, key: &str) -> (PathBuf, PathBuf) {
        let h = sha256_hex(key.as_bytes());
        (self.dir.join(format!("{h}.json")), self.dir.join(format!("{h}.meta.json")))
    }

    /// The cached payload, if the entry exists, belongs to this key and
    /// its checksum still matches.
    pub fn get(&self, key: &str) -> Option<Vec<u8>> {
        let (payload, meta) = self.paths(key);
        let entry: CacheEntry = serde_json::from_slice(&fs::read(meta).ok()?).ok()?;
        if entry.key != key {
            return None;
        }
        let data = fs::read(payload).ok()?;
        (sha256_hex(&data) == entry.checksum).then_some(data)
    }

    pub fn put(&self, key: &str, data: &[u8]) -> Result<CacheEntry, CliError> {
        let (payload, meta) = self.paths(key);
        write_atomic(&payload, data)?;
        let entry = CacheEntry { key: key.to_string(), payload, checksum: sha256_hex(data) };
        write_atomic(&meta, serde_json::to_string_pretty(&entry)?.as_bytes())?;
        Ok(entry)
    }

    /// Returns the cached payload or computes, stores and returns it.
    pub fn get_or_compute(
        &self,
        key: &str,
        compute: impl FnOnce() -> Result<Vec<u8>, CliError>,
    ) -> Result<(Vec<u8>, bool), CliError> {
        if let Some(d) = self.get(key) {
            return Ok((d, true));
        }
        let d = compute()?;
        self.put(key, &d)?;
        Ok((d, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path()).unwrap();
        let k = Cache::key("enumerate", "n=2");
        assert!(c.get(&k).is_none());
        let e = c.put(&k, b"payload").unwrap();
        assert_eq!(c.get(&k).unwrap(), b"payload");
        fs::write(&e.payload, b"tampered").unwrap();
        assert!(c.get(&k).is_none());
        let (d, hit) = c.get_or_compute(&k, || Ok(b"fresh".to_vec())).unwrap();
        assert_eq!((d.as_slice(), hit), (&b"fresh"[..], false));
        let (_, hit) = c.get_or_compute(&k, || unreachable!()).unwrap();
        assert!(hit);
    }
}
