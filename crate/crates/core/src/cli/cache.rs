//! On-disk cache of family tables, one JSON file per (family, α, nmax).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::families::{Family, FamilyTable};

pub const DEFAULT_DIR: &str = ".polyzeta-cache";
pub const DIR_ENV: &str = "POLYZETA_CACHE_DIR";

/// `none`, or `p-q` with a leading `m` for negative α (`-5/2` → `m5-2`).
pub fn alpha_encoding(family: &Family) -> String {
    match family.alpha() {
        None => "none".into(),
        Some(a) => {
            let sign = if a.numer().sign() == num_bigint::Sign::Minus {
                "m"
            } else {
                ""
            };
            format!("{sign}{}-{}", a.numer().magnitude(), a.denom())
        }
    }
}

pub fn file_name(family: &Family, nmax: usize) -> String {
    format!("{}_{}_{}.json", family.tag(), alpha_encoding(family), nmax)
}

#[derive(Clone, Debug)]
pub struct TableCache {
    dir: Option<PathBuf>,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache {
            dir: Some(dir.into()),
        }
    }

    pub fn disabled() -> Self {
        TableCache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Path for a key, or `None` when caching is off.
    pub fn path(&self, family: &Family, nmax: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(file_name(family, nmax)))
    }

    /// Reads a cached table; unreadable or mismatched files are reported on
    /// `warn` and treated as a miss.
    pub fn load(&self, family: &Family, nmax: usize, warn: &mut dyn Write) -> Option<FamilyTable> {
        let path = self.path(family, nmax)?;
        let text = fs::read_to_string(&path).ok()?;
        let parsed = serde_json::from_str(&text)
            .map_err(|e| e.to_string())
            .and_then(|v| FamilyTable::from_json(&v).map_err(|e| e.to_string()));
        match parsed {
            Ok(t) if t.family() == family && t.nmax() == nmax => Some(t),
            Ok(_) => {
                let _ = writeln!(
                    warn,
                    "warning: cache file {} holds another key, recomputing",
                    path.display()
                );
                None
            }
            Err(e) => {
                let _ = writeln!(
                    warn,
                    "warning: ignoring corrupt cache file {}: {e}",
                    path.display()
                );
                None
            }
        }
    }

    /// Writes through a temporary file and a rename, so readers never see a
    /// partial table.
    pub fn store(&self, table: &FamilyTable) -> std::io::Result<()> {
        let Some(path) = self.path(table.family(), table.nmax()) else {
            return Ok(());
        };
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(
            ".{}.{}.tmp",
            file_name(table.family(), table.nmax()),
            std::process::id()
        ));
        fs::write(&tmp, serde_json::to_string(&table.to_json())?)?;
        fs::rename(&tmp, &path).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }

    /// Cached table for the key, computing and storing it on a miss. Write
    /// failures only produce a warning.
    pub fn get_or_build(
        &self,
        family: &Family,
        nmax: usize,
        build: impl FnOnce() -> Result<FamilyTable>,
        warn: &mut dyn Write,
    ) -> Result<FamilyTable> {
        if let Some(t) = self.load(family, nmax, warn) {
            return Ok(t);
        }
        let table = build()?;
        if let Err(e) = self.store(&table) {
            let _ = writeln!(warn, "warning: could not write cache: {e}");
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rational::q;

    #[test]
    fn names() {
        assert_eq!(file_name(&Family::B, 50), "B_none_50.json");
        assert_eq!(
            file_name(&Family::Balpha(q(-5, 2)), 30),
            "Balpha_m5-2_30.json"
        );
        assert_eq!(file_name(&Family::Balpha(q(1, 3)), 8), "Balpha_1-3_8.json");
    }
}
