//! On-disk cache of Kazhdan-Lusztig tables, one JSON file per `n`.
//!
//! Entries are checked on load against the shape of a KL basis element
//! (`P_{w,w} = 1`, Bruhat support, polynomial in `q`, degree bound); a file
//! failing those checks is rejected as a whole.

use std::fs;
use std::path::{Path, PathBuf};

use hecke_core::hecke::Side;
use hecke_core::{Budget, KlTable, LaurentQ, Permutation};
use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::json::{laurent_from_json, laurent_to_json, perm_from_json, TermJson};

pub const FORMAT: &str = "hecke-lab-kl";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheEntry {
    pub w: Vec<usize>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheFile {
    pub format: String,
    pub version: u32,
    pub n: usize,
    pub entries: Vec<CacheEntry>,
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("kl-n{}.json", n))
}

pub fn to_file(table: &KlTable) -> CacheFile {
    let entries = table
        .computed()
        .into_iter()
        .map(|(w, terms)| CacheEntry {
            w: w.to_vec(),
            terms: terms.iter().map(|(u, p)| TermJson { perm: u.to_vec(), coeff: laurent_to_json(p) }).collect(),
        })
        .collect();
    CacheFile { format: FORMAT.to_string(), version: VERSION, n: table.n(), entries }
}

/// Rebuilds a table from a cache file, validating every entry.
pub fn from_file(file: &CacheFile, budget: &Budget) -> Result<KlTable> {
    if file.format != FORMAT || file.version != VERSION {
        return Err(LabError::schema("KL cache", format!("unsupported format {} v{}", file.format, file.version)));
    }
    let mut table = KlTable::with_options(file.n, Side::Left, budget)?;
    for e in &file.entries {
        let w = perm_from_json(&e.w)?;
        let mut terms: Vec<(Permutation, LaurentQ)> = Vec::with_capacity(e.terms.len());
        for t in &e.terms {
            terms.push((perm_from_json(&t.perm)?, laurent_from_json(&t.coeff)?));
        }
        table.insert(&w, &terms)?;
    }
    Ok(table)
}

/// `Ok(None)` when no cache file exists yet.
pub fn load(dir: &Path, n: usize, budget: &Budget) -> Result<Option<KlTable>> {
    let path = cache_path(dir, n);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(source) => return Err(LabError::Io { path, source }),
    };
    let file: CacheFile = crate::json::from_str(&text, &path.display().to_string())?;
    if file.n != n {
        return Err(LabError::schema("KL cache", format!("{} holds n = {}", path.display(), file.n)));
    }
    from_file(&file, budget).map(Some)
}

/// Writes through a temporary file and a rename.
pub fn save(dir: &Path, table: &KlTable) -> Result<()> {
    fs::create_dir_all(dir).map_err(|source| LabError::Io { path: dir.to_path_buf(), source })?;
    let path = cache_path(dir, table.n());
    let tmp = path.with_extension("json.tmp");
    let text = serde_json::to_string(&to_file(table))
        .map_err(|source| LabError::Json { context: "serializing KL cache".into(), source })?;
    fs::write(&tmp, text).map_err(|source| LabError::Io { path: tmp.clone(), source })?;
    fs::rename(&tmp, &path).map_err(|source| LabError::Io { path, source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let budget = Budget::default();
        let mut t = KlTable::new(4).unwrap();
        let w: Permutation = "3412".parse().unwrap();
        let e = t.basis_element(&w).unwrap();
        save(dir.path(), &t).unwrap();
        let mut back = load(dir.path(), 4, &budget).unwrap().unwrap();
        assert_eq!(back.computed_count(), t.computed_count());
        assert_eq!(back.basis_element(&w).unwrap(), e);
        assert!(load(dir.path(), 5, &budget).unwrap().is_none());
    }

    #[test]
    fn rejects_tampered_entries() {
        let mut t = KlTable::new(3).unwrap();
        t.basis_element(&"321".parse().unwrap()).unwrap();
        let mut file = to_file(&t);
        let last = file.entries.last_mut().unwrap();
        last.terms.last_mut().unwrap().coeff = laurent_to_json(&LaurentQ::from_q_coeffs(&[1, 1]));
        assert!(from_file(&file, &Budget::default()).is_err());
        file.version = 99;
        assert!(from_file(&file, &Budget::default()).is_err());
    }
}
