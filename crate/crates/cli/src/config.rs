use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use srt_core::repthy::{Bounds, CachedRepthy, InvariantCache};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Config {
    pub weight_bound: usize,
    pub degree_bound: usize,
    pub sample_count: usize,
    pub seed: u64,
    /// Accelerator only: never serialized, never changes a result.
    #[serde(skip)]
    pub cache_path: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            weight_bound: 3,
            degree_bound: 4,
            sample_count: 25,
            seed: 0,
            cache_path: None,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), CliError> {
        for (name, value) in [
            ("--weight-bound", self.weight_bound),
            ("--degree-bound", self.degree_bound),
            ("--samples", self.sample_count),
        ] {
            if value == 0 {
                return Err(CliError::Usage(format!("{name} must be positive")));
            }
        }
        Ok(())
    }

    /// Seed of the `i`-th sample; printed with every randomized check.
    pub fn sample_seed(&self, i: usize) -> u64 {
        self.seed.wrapping_mul(1_000_003).wrapping_add(i as u64)
    }

    pub fn repthy(&self) -> Result<CachedRepthy, CliError> {
        let cache = match &self.cache_path {
            Some(path) => InvariantCache::open(path)?,
            None => InvariantCache::in_memory(),
        };
        Ok(CachedRepthy::new(cache, Bounds::default()))
    }
}
