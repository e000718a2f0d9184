//! Persistent character tables, one JSON file per `n`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use log::{debug, warn};
use symlevel_core::character::{TableSet, TABLE_CAP};
use symlevel_core::error::check_cap;
use symlevel_core::{CharacterTable, ParallelMap};

use crate::formats::TableDocument;

pub const CACHE_DIR_ENV: &str = "SYMLEVEL_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".symlevel_cache";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheOutcome {
    /// Served from a valid file.
    Hit,
    /// No file; computed and stored.
    Miss,
    /// The file was unreadable or inconsistent; computed and overwritten.
    Recomputed,
}

#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
}

enum Lookup {
    Found(CharacterTable),
    Absent,
    Corrupt(String),
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    /// `$SYMLEVEL_CACHE_DIR`, or `./.symlevel_cache`.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(d) if !d.is_empty() => Self::new(d),
            _ => Self::new(DEFAULT_CACHE_DIR),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("chartable_v1_{n}.json"))
    }

    fn lookup(&self, n: usize) -> Lookup {
        let path = self.path(n);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Lookup::Absent,
            Err(e) => return Lookup::Corrupt(e.to_string()),
        };
        let doc: TableDocument = match serde_json::from_str(&text) {
            Ok(d) => d,
            Err(e) => return Lookup::Corrupt(e.to_string()),
        };
        if doc.n != n {
            return Lookup::Corrupt(format!("file holds n={}", doc.n));
        }
        match doc.into_table() {
            Ok(t) => Lookup::Found(t),
            Err(e) => Lookup::Corrupt(e.to_string()),
        }
    }

    /// Writes through a temporary file and a rename, so readers never see a
    /// partial table.
    pub fn store(&self, table: &CharacterTable) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(table.n());
        let tmp = self.dir.join(format!(".chartable_v1_{}.{}.tmp", table.n(), std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(TableDocument::from_table(table).to_json().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)
    }

    fn store_logged(&self, table: &CharacterTable) {
        if let Err(e) = self.store(table) {
            warn!("could not write {}: {e}", self.path(table.n()).display());
        }
    }

    fn classify(&self, n: usize) -> (Option<CharacterTable>, CacheOutcome) {
        match self.lookup(n) {
            Lookup::Found(t) => {
                debug!("character table n={n} served from {}", self.path(n).display());
                (Some(t), CacheOutcome::Hit)
            }
            Lookup::Absent => (None, CacheOutcome::Miss),
            Lookup::Corrupt(why) => {
                warn!("ignoring corrupt cache file {}: {why}; recomputing", self.path(n).display());
                (None, CacheOutcome::Recomputed)
            }
        }
    }

    /// The table of `S_n`, from disk when a valid file exists.
    pub fn table<P: ParallelMap>(&self, n: usize, par: &P) -> symlevel_core::Result<(CharacterTable, CacheOutcome)> {
        let (found, outcome) = self.classify(n);
        if let Some(t) = found {
            return Ok((t, outcome));
        }
        let t = CharacterTable::build(n, par)?;
        self.store_logged(&t);
        Ok((t, outcome))
    }

    /// Tables of `S_0, …, S_n`. Cached layers are reused as long as they form
    /// an unbroken prefix; the rest is computed and stored.
    pub fn table_set<P: ParallelMap>(&self, n: usize, par: &P) -> symlevel_core::Result<(TableSet, Vec<CacheOutcome>)> {
        check_cap("character table", n, TABLE_CAP)?;
        let mut tables = Vec::new();
        let mut outcomes = Vec::new();
        for k in 0..=n {
            let (found, outcome) = self.classify(k);
            outcomes.push(outcome);
            match found {
                Some(t) => tables.push(t),
                None => break,
            }
        }
        let known = tables.len();
        let mut set = if known == 0 {
            TableSet::build(0, par)?
        } else {
            TableSet::from_tables(tables)?
        };
        set.extend_to(n, par)?;
        for k in known..=n {
            if k >= outcomes.len() {
                outcomes.push(self.classify_missing(k));
            }
            self.store_logged(&set.tables()[k]);
        }
        Ok((set, outcomes))
    }

    fn classify_missing(&self, k: usize) -> CacheOutcome {
        if self.path(k).exists() {
            CacheOutcome::Recomputed
        } else {
            CacheOutcome::Miss
        }
    }
}
