//! Optional on-disk result cache for the command line tool.
//!
//! When the `SKEIN_CACHE` environment variable names a directory, finished
//! command output is stored there and replayed on an identical invocation.
//! The key covers the crate version, the command name, and every input that
//! feeds the computation (arguments and file contents), so a hit is only
//! possible when the bytes written out would be identical anyway. Cache
//! trouble is never fatal: a read or write that fails just means the
//! computation runs again.

use std::fs;
use std::hash::{Hash, Hasher};
use std::path::PathBuf;

/// Builds the key material for one cacheable invocation.
#[derive(Debug, Clone)]
pub struct CacheKey {
    parts: Vec<String>,
}

impl CacheKey {
    pub fn new(command: &str) -> Self {
        CacheKey {
            parts: vec![
                format!("version={}", env!("CARGO_PKG_VERSION")),
                format!("command={command}"),
            ],
        }
    }

    pub fn arg(mut self, name: &str, value: impl std::fmt::Display) -> Self {
        self.parts.push(format!("{name}={value}"));
        self
    }

    /// Folds a whole input file into the key, so edits to it miss the cache.
    pub fn file(mut self, label: &str, contents: &str) -> Self {
        self.parts
            .push(format!("{label}:{}:{contents}", contents.len()));
        self
    }

    fn file_name(&self) -> String {
        let mut hasher = std::hash::DefaultHasher::new();
        self.parts.hash(&mut hasher);
        format!("skein-{:016x}.out", hasher.finish())
    }
}

/// A cache directory, or a no-op stand-in when none is configured.
#[derive(Debug, Clone, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// Reads `SKEIN_CACHE`; an unset or empty variable disables caching.
    pub fn from_env() -> Self {
        let dir = std::env::var_os("SKEIN_CACHE")
            .filter(|v| !v.is_empty())
            .map(PathBuf::from);
        Cache { dir }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    pub fn fetch(&self, key: &CacheKey) -> Option<String> {
        let dir = self.dir.as_ref()?;
        fs::read_to_string(dir.join(key.file_name())).ok()
    }

    /// Stores through a temporary file and a rename, so a concurrent reader
    /// never sees a half-written entry.
    pub fn store(&self, key: &CacheKey, output: &str) {
        let Some(dir) = self.dir.as_ref() else {
            return;
        };
        if fs::create_dir_all(dir).is_err() {
            return;
        }
        let final_path = dir.join(key.file_name());
        let tmp_path = dir.join(format!(
            "{}.tmp-{}",
            key.file_name(),
            std::process::id()
        ));
        if fs::write(&tmp_path, output).is_ok() && fs::rename(&tmp_path, &final_path).is_err() {
            let _ = fs::remove_file(&tmp_path);
        }
    }
}
