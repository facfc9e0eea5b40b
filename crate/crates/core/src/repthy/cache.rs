use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use super::branching::{ct_invariant_dim, gt_invariant_dim, h0_with, Embedding};
use super::weight::DominantWeight;
use super::{Bounds, RepthyError};
use crate::partitions::{GroupKind, GroupType};

/// Bumped whenever a cached operation changes meaning; stale files are ignored.
pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<String, u64>,
}

/// Memo of integer results keyed by `(operation, canonical arguments)`,
/// optionally backed by a JSON file. Reads take a shared lock; inserts take
/// the exclusive lock and rewrite the file through a temporary + rename.
#[derive(Debug, Default)]
pub struct InvariantCache {
    path: Option<PathBuf>,
    entries: RwLock<BTreeMap<String, u64>>,
}

impl InvariantCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Opens `path`, reading it if present. A file with another format version starts empty.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, RepthyError> {
        let path = path.as_ref().to_path_buf();
        let entries = match fs::read_to_string(&path) {
            Ok(text) => {
                let file: CacheFile =
                    serde_json::from_str(&text).map_err(|e| RepthyError::Cache(format!("{}: {e}", path.display())))?;
                if file.version == CACHE_FORMAT_VERSION {
                    file.entries
                } else {
                    BTreeMap::new()
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(RepthyError::Cache(format!("{}: {e}", path.display()))),
        };
        Ok(Self {
            path: Some(path),
            entries: RwLock::new(entries),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &str) -> Option<u64> {
        self.entries.read().expect("cache lock").get(key).copied()
    }

    pub fn get_or_compute(
        &self,
        key: String,
        compute: impl FnOnce() -> Result<u64, RepthyError>,
    ) -> Result<u64, RepthyError> {
        if let Some(v) = self.get(&key) {
            return Ok(v);
        }
        let value = compute()?;
        let mut entries = self.entries.write().expect("cache lock");
        entries.insert(key, value);
        if let Some(path) = &self.path {
            let file = CacheFile {
                version: CACHE_FORMAT_VERSION,
                entries: entries.clone(),
            };
            let text = serde_json::to_string_pretty(&file).map_err(|e| RepthyError::Cache(e.to_string()))?;
            let tmp = path.with_extension("tmp");
            fs::write(&tmp, text)
                .and_then(|_| fs::rename(&tmp, path))
                .map_err(|e| RepthyError::Cache(format!("{}: {e}", path.display())))?;
        }
        Ok(value)
    }
}

/// The invariant-dimension operations behind a shared cache and configurable bounds.
#[derive(Debug, Default)]
pub struct CachedRepthy {
    pub cache: InvariantCache,
    pub bounds: Bounds,
}

impl CachedRepthy {
    pub fn new(cache: InvariantCache, bounds: Bounds) -> Self {
        Self { cache, bounds }
    }

    pub fn gt_invariant_dim(&self, lambda: &DominantWeight, k: usize) -> Result<u64, RepthyError> {
        self.cache
            .get_or_compute(format!("gt|{lambda}|{k}"), || gt_invariant_dim(lambda, k))
    }

    pub fn ct_invariant_dim(&self, lambda: &DominantWeight, subgroup: GroupType, embedding: Embedding) -> Result<u64, RepthyError> {
        self.cache.get_or_compute(format!("ct|{lambda}|{subgroup}|{embedding:?}"), || {
            ct_invariant_dim(lambda, subgroup, embedding, &self.bounds)
        })
    }

    pub fn h0(&self, group: GroupKind, n: usize, m: usize, lambda: &DominantWeight) -> Result<u64, RepthyError> {
        self.cache.get_or_compute(format!("h0|{}|{n}|{m}|{lambda}", group.short_name()), || {
            h0_with(group, n, m, lambda, &self.bounds)
        })
    }
}
