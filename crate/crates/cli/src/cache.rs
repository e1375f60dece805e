//! On-disk cache of generated objects.
//!
//! One JSON record per key, written through a temporary file and renamed
//! into place. A record whose checksum does not match its payload is
//! treated as missing.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "NINF_CACHE_DIR";
pub const DEFAULT_DIR: &str = ".ninf-cache";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtifactRecord {
    pub kind: String,
    pub order: usize,
    pub dim: usize,
    pub recipe: String,
    pub seed: u64,
    pub cert_level: String,
    /// The object in its JSON form.
    pub payload: String,
    /// Hex SHA-256 of `payload`.
    pub checksum: String,
}

pub fn checksum(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}

/// File stem of the record for `(kind, order, dim, recipe, seed)`.
pub fn key_for(kind: &str, order: usize, dim: usize, recipe: &str, seed: u64) -> String {
    format!("{kind}-n{order}-d{dim}-{recipe}-s{seed}")
}

impl ArtifactRecord {
    pub fn new(kind: &str, order: usize, dim: usize, recipe: &str, seed: u64, cert_level: &str, payload: String) -> Self {
        Self {
            kind: kind.into(),
            order,
            dim,
            recipe: recipe.into(),
            seed,
            cert_level: cert_level.into(),
            checksum: checksum(&payload),
            payload,
        }
    }

    pub fn is_intact(&self) -> bool {
        checksum(&self.payload) == self.checksum
    }

    pub fn key(&self) -> String {
        key_for(&self.kind, self.order, self.dim, &self.recipe, self.seed)
    }
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn from_env() -> Self {
        Self::new(std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| DEFAULT_DIR.into()))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// The intact record under `key`, if any.
    pub fn load(&self, key: &str) -> Option<ArtifactRecord> {
        let text = std::fs::read_to_string(self.path(key)).ok()?;
        let rec: ArtifactRecord = serde_json::from_str(&text).ok()?;
        (rec.is_intact() && rec.key() == key).then_some(rec)
    }

    pub fn store(&self, rec: &ArtifactRecord) -> std::io::Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer_pretty(&mut tmp, rec)?;
        tmp.write_all(b"\n")?;
        tmp.persist(self.path(&rec.key())).map_err(|e| e.error)?;
        Ok(())
    }
}
