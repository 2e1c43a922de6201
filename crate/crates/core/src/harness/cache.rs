//! JSON-lines solve cache keyed by graph hash and configuration.

use crate::error::{Error, Result};
use crate::game::GameConfig;
use crate::graph::Graph;
use crate::solver::{solve_with, SolveResult, SolverOptions};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

pub const CACHE_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const CACHE_ENV_VAR: &str = "PURSUIT_CACHE_DIR";
const CACHE_FILE: &str = "solves.jsonl";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheEntry {
    pub graph_hash: String,
    pub config: GameConfig,
    pub result: SolveResult,
    pub version: String,
}

/// Append-only cache; last write wins on reload.
pub struct SolveCache {
    path: PathBuf,
    entries: HashMap<(String, String), CacheEntry>,
}

fn config_key(cfg: &GameConfig) -> String {
    serde_json::to_string(cfg).expect("config serializes")
}

impl SolveCache {
    /// Cache directory from PURSUIT_CACHE_DIR, defaulting to
    /// `.pursuit-cache` under the working directory.
    pub fn dir_from_env() -> PathBuf {
        std::env::var_os(CACHE_ENV_VAR)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".pursuit-cache"))
    }

    pub fn open(dir: &Path) -> Result<SolveCache> {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
        let path = dir.join(CACHE_FILE);
        let mut entries = HashMap::new();
        if path.exists() {
            let file =
                std::fs::File::open(&path).map_err(|e| Error::io(path.display().to_string(), e))?;
            for line in std::io::BufReader::new(file).lines() {
                let line = line.map_err(|e| Error::io(path.display().to_string(), e))?;
                if line.trim().is_empty() {
                    continue;
                }
                let entry: CacheEntry = serde_json::from_str(&line)?;
                entries.insert((entry.graph_hash.clone(), config_key(&entry.config)), entry);
            }
        }
        Ok(SolveCache { path, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, g: &Graph, cfg: &GameConfig) -> Option<&SolveResult> {
        self.entries
            .get(&(g.hash_hex(), config_key(cfg)))
            .map(|e| &e.result)
    }

    pub fn put(&mut self, g: &Graph, cfg: &GameConfig, result: SolveResult) -> Result<()> {
        let entry = CacheEntry {
            graph_hash: g.hash_hex(),
            config: cfg.clone(),
            result,
            version: CACHE_VERSION.into(),
        };
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| Error::io(self.path.display().to_string(), e))?;
        let line = serde_json::to_string(&entry)?;
        writeln!(file, "{line}").map_err(|e| Error::io(self.path.display().to_string(), e))?;
        self.entries
            .insert((entry.graph_hash.clone(), config_key(&entry.config)), entry);
        Ok(())
    }

    /// Solve through the cache; hits return the stored result.
    pub fn solve_cached(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        opts: &SolverOptions,
    ) -> Result<SolveResult> {
        if let Some(hit) = self.get(g, cfg) {
            return Ok(hit.clone());
        }
        let result = solve_with(g, cfg, opts)?;
        self.put(g, cfg, result.clone())?;
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn cache_round_trips_and_survives_reopen() {
        let dir = tempfile::tempdir().unwrap();
        let g = cycle(5).unwrap();
        let cfg = GameConfig::classic(2);
        {
            let mut cache = SolveCache::open(dir.path()).unwrap();
            let first = cache
                .solve_cached(&g, &cfg, &SolverOptions::default())
                .unwrap();
            assert!(first.cop_win);
            let hit = cache.get(&g, &cfg).unwrap();
            assert_eq!(hit.capture_time, first.capture_time);
        }
        let cache = SolveCache::open(dir.path()).unwrap();
        assert_eq!(cache.len(), 1);
        let hit = cache.get(&g, &cfg).unwrap();
        assert!(hit.cop_win);
        // Different config misses.
        assert!(cache.get(&g, &GameConfig::classic(1)).is_none());
    }

    #[test]
    fn cached_entries_match_recomputation() {
        use crate::harness::sample::random_connected;
        use rand::SeedableRng;
        let dir = tempfile::tempdir().unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xcace);
        let mut graphs = Vec::new();
        {
            let mut cache = SolveCache::open(dir.path()).unwrap();
            for i in 0..50 {
                let g = random_connected(&mut rng, 3 + i % 6);
                let cfg = GameConfig::speed(1 + i % 2, 1 + i % 3);
                cache
                    .solve_cached(&g, &cfg, &SolverOptions::default())
                    .unwrap();
                graphs.push((g, cfg));
            }
        }
        let cache = SolveCache::open(dir.path()).unwrap();
        for (g, cfg) in &graphs {
            let cached = cache.get(g, cfg).expect("entry survives reopen");
            let fresh = solve_with(g, cfg, &SolverOptions::default()).unwrap();
            assert_eq!(cached.cop_win, fresh.cop_win);
            assert_eq!(cached.capture_time, fresh.capture_time);
            assert_eq!(cached.optimal_placement, fresh.optimal_placement);
            assert_eq!(cached.state_count, fresh.state_count);
        }
    }
}
