//! On-disk cache of tables of marks keyed by the canonical group hash.
//!
//! Files are written to a temporary file in the cache directory and renamed
//! into place, so concurrent readers never see a partial table.

use std::io::Write;
use std::path::{Path, PathBuf};

use crate::burnside::MarksTable;
use crate::config::Config;
use crate::error::Result;
use crate::group::PermGroup;

#[derive(Clone, Debug)]
pub struct MarksCache {
    dir: PathBuf,
}

impl MarksCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        MarksCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, hash: &str) -> PathBuf {
        self.dir.join(format!("marks-{hash}.json"))
    }

    /// A cached table for `group`, if present and readable. Corrupt or
    /// mismatched files are ignored.
    pub fn load(&self, group: &PermGroup) -> Option<MarksTable> {
        let hash = group.canonical_hash();
        let text = std::fs::read_to_string(self.path_for(&hash)).ok()?;
        let table: MarksTable = serde_json::from_str(&text).ok()?;
        (table.group_hash() == hash && table.group_order() == group.order()).then_some(table)
    }

    pub fn store(&self, table: &MarksTable) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, table)?;
        tmp.flush()?;
        tmp.persist(self.path_for(table.group_hash()))
            .map_err(|e| e.error)?;
        Ok(())
    }

    pub fn load_or_compute(&self, group: &PermGroup, config: &Config) -> Result<MarksTable> {
        if let Some(t) = self.load(group) {
            return Ok(t);
        }
        let t = MarksTable::compute(group, config)?;
        self.store(&t)?;
        Ok(t)
    }
}

/// Computes the marks of `group`, going through `cache` when one is given.
pub fn marks_table(group: &PermGroup, config: &Config, cache: Option<&MarksCache>) -> Result<MarksTable> {
    match cache {
        Some(c) => c.load_or_compute(group, config),
        None => MarksTable::compute(group, config),
    }
}
