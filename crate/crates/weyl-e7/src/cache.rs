//! Disk cache for the class table, so the 2.9M-element enumeration runs
//! once per machine instead of once per process.
//!
//! The cache stores only the 60 records; everything derivable from the
//! representatives (fingerprints, orders, ranks, minimality) is recomputed
//! and re-checked on load, and the matrices themselves are revalidated by
//! the `Isometry` deserializer.  Any mismatch silently discards the file
//! and rebuilds.  Delete the file to force a rebuild by hand.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::classes::{self, BuildError, ClassTable, ConjugacyClassRecord, GROUP_ORDER};
use crate::cyclotomic;
use crate::group::{self, BudgetExceeded};
use crate::table_data::ROWS;

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    records: Vec<ConjugacyClassRecord>,
    notes: Vec<String>,
}

/// `DP2_CACHE_DIR` if set, else a fixed directory under the system temp dir.
pub fn default_cache_dir() -> PathBuf {
    match std::env::var_os("DP2_CACHE_DIR") {
        Some(d) if !d.is_empty() => PathBuf::from(d),
        _ => std::env::temp_dir().join("dp2-cache"),
    }
}

/// Path of the cache file inside `dir`.
pub fn cache_file_path(dir: &Path) -> PathBuf {
    dir.join(format!("class-table-v{CACHE_VERSION}.json"))
}

fn validate(records: &[ConjugacyClassRecord]) -> bool {
    if records.len() != 60 {
        return false;
    }
    if records.iter().map(|r| r.class_size).sum::<u64>() != GROUP_ORDER {
        return false;
    }
    for (i, r) in records.iter().enumerate() {
        let row = &ROWS[i];
        let Ok(factors) = classes::pic_cyclotomic_factors(&r.representative) else {
            return false;
        };
        let rho = factors.get(&1).copied().unwrap_or(0);
        let ok = r.id == i as u32 + 1
            && r.carter_label == row.carter
            && r.order == cyclotomic::factors_order(&factors)
            && r.order == row.order
            && r.rho_invariant == rho
            && r.rho_invariant == row.rho
            && r.geiser_partner == row.geiser;
        if !ok {
            return false;
        }
    }
    true
}

/// Load and revalidate the cached table in `dir`; `None` if the file is
/// missing, stale, or fails any check.
pub fn load(dir: &Path) -> Option<ClassTable> {
    let data = fs::read(cache_file_path(dir)).ok()?;
    let file: CacheFile = serde_json::from_slice(&data).ok()?;
    if file.version != CACHE_VERSION || !validate(&file.records) {
        return None;
    }
    Some(ClassTable::from_records(file.records, file.notes))
}

/// Write the table to `dir` atomically (temp file then rename).
pub fn save(dir: &Path, table: &ClassTable) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let file = CacheFile {
        version: CACHE_VERSION,
        records: table.records().to_vec(),
        notes: table.notes().to_vec(),
    };
    let data = serde_json::to_vec(&file).expect("records serialize");
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(&data)?;
    tmp.persist(cache_file_path(dir)).map_err(|e| e.error)?;
    Ok(())
}

#[derive(Debug)]
pub enum TableError {
    Budget(BudgetExceeded),
    Build(BuildError),
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Budget(e) => write!(f, "{e}"),
            TableError::Build(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TableError {}

/// Load the class table from `dir`, or enumerate the group and build it
/// (then cache it, best effort; a failed write is not an error).
pub fn load_or_build(budget_bytes: usize, dir: &Path) -> Result<ClassTable, TableError> {
    if let Some(table) = load(dir) {
        return Ok(table);
    }
    let store = group::enumerate_group(budget_bytes).map_err(TableError::Budget)?;
    let table = ClassTable::build(&store).map_err(TableError::Build)?;
    let _ = save(dir, &table);
    Ok(table)
}
