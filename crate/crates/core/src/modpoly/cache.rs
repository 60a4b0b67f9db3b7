//! Content-addressed on-disk cache of per-prime results.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::invariants::InvariantKind;

use super::{content_key, Backend, ModpResult};

/// One JSON file per (invariant, ℓ, p, backend, seed) under `dir/primes/`.
#[derive(Clone, Debug)]
pub struct PrimeCache {
    dir: PathBuf,
}

impl PrimeCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        PrimeCache { dir: dir.into().join("primes") }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, inv: InvariantKind, ell: u64, p: u64, backend: Backend, seed: u64) -> PathBuf {
        let key = hex::encode(content_key(inv, ell, p, backend, seed));
        self.dir.join(format!("{inv}-{ell}-{p}-{}.json", &key[..16]))
    }

    /// A cached result, if present and consistent with the key.
    pub fn get(&self, inv: InvariantKind, ell: u64, p: u64, backend: Backend, seed: u64) -> Option<ModpResult> {
        let text = fs::read_to_string(self.path(inv, ell, p, backend, seed)).ok()?;
        let r: ModpResult = serde_json::from_str(&text).ok()?;
        (r.invariant == inv && r.ell == ell && r.prime == p && r.backend == backend && r.check_shape().is_ok()).then_some(r)
    }

    pub fn put(&self, r: &ModpResult, seed: u64) -> Result<()> {
        let path = self.path(r.invariant, r.ell, r.prime, r.backend, seed);
        let text = serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?;
        write_atomic(&path, text.as_bytes())
    }
}

/// Write via a temporary file in the same directory and rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.persist(path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}
