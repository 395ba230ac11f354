//! Shared memo of Jack expansions, their power-sum forms, skew expansions
//! and g-polynomials, with an optional on-disk cache of straight shapes.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::gpoly::g_from_p;
use super::ks::jack_ks;
use super::skew::skew_stanley;
use crate::error::{Error, Result};
use crate::exactalg::{biguint_to_rational, AlphaPoly, AlphaRat};
use crate::partitions::{factorial, Partition, SkewShape};
use crate::symfunc::{SymFuncM, SymFuncP};

pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    format_version: u32,
    partition: Partition,
    expansion: SymFuncM,
}

/// Counters describing how expansions were obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StoreStats {
    pub memory_hits: u64,
    pub disk_hits: u64,
    pub disk_rejected: u64,
    pub computed: u64,
    pub disk_writes: u64,
}

#[derive(Default)]
struct Counters {
    memory_hits: AtomicU64,
    disk_hits: AtomicU64,
    disk_rejected: AtomicU64,
    computed: AtomicU64,
    disk_writes: AtomicU64,
}

type Triple = (Partition, Partition, Partition);

#[derive(Default)]
pub struct JackStore {
    cache_dir: RwLock<Option<PathBuf>>,
    jacks: RwLock<HashMap<Partition, Arc<SymFuncM>>>,
    p_jacks: RwLock<HashMap<Partition, Arc<SymFuncP>>>,
    skews: RwLock<HashMap<SkewShape, Arc<SymFuncM>>>,
    gs: RwLock<HashMap<Triple, AlphaPoly>>,
    counters: Counters,
}

fn lookup<K: std::hash::Hash + Eq, V: Clone>(map: &RwLock<HashMap<K, V>>, k: &K) -> Option<V> {
    map.read().expect("memo lock").get(k).cloned()
}

fn insert<K: std::hash::Hash + Eq, V: Clone>(map: &RwLock<HashMap<K, V>>, k: K, v: V) -> V {
    map.write()
        .expect("memo lock")
        .entry(k)
        .or_insert(v)
        .clone()
}

impl JackStore {
    pub fn new(cache_dir: Option<PathBuf>) -> Self {
        let store = JackStore::default();
        store.set_cache_dir(cache_dir);
        store
    }

    /// The process-wide store used by the free functions of this module.
    pub fn global() -> &'static JackStore {
        static GLOBAL: OnceLock<JackStore> = OnceLock::new();
        GLOBAL.get_or_init(JackStore::default)
    }

    pub fn set_cache_dir(&self, dir: Option<PathBuf>) {
        *self.cache_dir.write().expect("cache dir lock") = dir;
    }

    pub fn cache_dir(&self) -> Option<PathBuf> {
        self.cache_dir.read().expect("cache dir lock").clone()
    }

    /// Drops every in-memory result; the disk cache is untouched.
    pub fn clear_memory(&self) {
        self.jacks.write().expect("memo lock").clear();
        self.p_jacks.write().expect("memo lock").clear();
        self.skews.write().expect("memo lock").clear();
        self.gs.write().expect("memo lock").clear();
    }

    pub fn stats(&self) -> StoreStats {
        let c = &self.counters;
        StoreStats {
            memory_hits: c.memory_hits.load(Ordering::Relaxed),
            disk_hits: c.disk_hits.load(Ordering::Relaxed),
            disk_rejected: c.disk_rejected.load(Ordering::Relaxed),
            computed: c.computed.load(Ordering::Relaxed),
            disk_writes: c.disk_writes.load(Ordering::Relaxed),
        }
    }

    /// `J_λ` in the monomial basis.
    pub fn jack(&self, lambda: &Partition) -> Arc<SymFuncM> {
        if let Some(j) = lookup(&self.jacks, lambda) {
            self.counters.memory_hits.fetch_add(1, Ordering::Relaxed);
            return j;
        }
        let dir = self.cache_dir();
        if let Some(dir) = &dir {
            match read_entry(dir, lambda) {
                Ok(Some(e)) => {
                    self.counters.disk_hits.fetch_add(1, Ordering::Relaxed);
                    return insert(&self.jacks, lambda.clone(), Arc::new(e));
                }
                Ok(None) => {}
                Err(_) => {
                    self.counters.disk_rejected.fetch_add(1, Ordering::Relaxed);
                }
            }
        }
        let j = jack_ks(lambda).expansion;
        self.counters.computed.fetch_add(1, Ordering::Relaxed);
        if let Some(dir) = &dir {
            if write_entry(dir, lambda, &j).is_ok() {
                self.counters.disk_writes.fetch_add(1, Ordering::Relaxed);
            }
        }
        insert(&self.jacks, lambda.clone(), Arc::new(j))
    }

    /// `J_λ` in the power-sum basis.
    pub fn jack_p(&self, lambda: &Partition) -> Arc<SymFuncP> {
        if let Some(j) = lookup(&self.p_jacks, lambda) {
            return j;
        }
        let p = self.jack(lambda).to_p();
        insert(&self.p_jacks, lambda.clone(), Arc::new(p))
    }

    /// `J_{λ/μ}` by Stanley's formula.
    pub fn skew(&self, shape: &SkewShape) -> Arc<SymFuncM> {
        if shape.inner().is_empty() {
            return self.jack(shape.outer());
        }
        if let Some(j) = lookup(&self.skews, shape) {
            return j;
        }
        let j = skew_stanley(shape).expansion;
        insert(&self.skews, shape.clone(), Arc::new(j))
    }

    /// `g^λ_{μ,ν}`.
    pub fn g(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<AlphaPoly> {
        if mu.size() + nu.size() != lambda.size() {
            return Ok(AlphaPoly::zero());
        }
        let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
        let key = (lambda.clone(), a.clone(), b.clone());
        if let Some(g) = lookup(&self.gs, &key) {
            return Ok(g);
        }
        let g = g_from_p(
            &self.jack_p(lambda),
            &self.jack_p(a),
            &self.jack_p(b),
            || format!("^{lambda}_{{{mu},{nu}}}"),
        )?;
        Ok(insert(&self.gs, key, g))
    }
}

fn entry_path(dir: &Path, lambda: &Partition) -> PathBuf {
    dir.join("J")
        .join(lambda.size().to_string())
        .join(format!("{lambda}.json"))
}

/// Reads a cached expansion; `Ok(None)` if absent, `Err` if present but
/// not trustworthy.
fn read_entry(dir: &Path, lambda: &Partition) -> Result<Option<SymFuncM>> {
    let path = entry_path(dir, lambda);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(Error::Cache(e.to_string())),
    };
    let entry: CacheEntry = serde_json::from_str(&text).map_err(|e| Error::Cache(e.to_string()))?;
    let n = lambda.size();
    if entry.format_version != CACHE_FORMAT_VERSION {
        return Err(Error::Cache(format!(
            "format version {}",
            entry.format_version
        )));
    }
    if entry.partition != *lambda || entry.expansion.degree() != n {
        return Err(Error::Cache(format!(
            "{} holds the wrong shape",
            path.display()
        )));
    }
    let expected = AlphaRat::constant(biguint_to_rational(&factorial(n)));
    if entry.expansion.coeff(&Partition::column(n)) != expected {
        return Err(Error::Cache(format!(
            "{} fails the n! check",
            path.display()
        )));
    }
    Ok(Some(entry.expansion))
}

fn write_entry(dir: &Path, lambda: &Partition, expansion: &SymFuncM) -> Result<()> {
    let path = entry_path(dir, lambda);
    let parent = path.parent().expect("entry path has a parent");
    fs::create_dir_all(parent).map_err(|e| Error::Cache(e.to_string()))?;
    let entry = CacheEntry {
        format_version: CACHE_FORMAT_VERSION,
        partition: lambda.clone(),
        expansion: expansion.clone(),
    };
    let json = serde_json::to_string(&entry).map_err(|e| Error::Json(e.to_string()))?;
    let mut tmp =
        tempfile::NamedTempFile::new_in(parent).map_err(|e| Error::Cache(e.to_string()))?;
    tmp.write_all(json.as_bytes())
        .map_err(|e| Error::Cache(e.to_string()))?;
    tmp.persist(&path)
        .map_err(|e| Error::Cache(e.to_string()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn disk_round_trip_and_rejection() {
        let dir = tempfile::tempdir().unwrap();
        let store = JackStore::new(Some(dir.path().to_path_buf()));
        let lambda = p("3,1");
        let j = store.jack(&lambda);
        assert_eq!(store.stats().computed, 1);
        assert_eq!(store.stats().disk_writes, 1);
        let path = dir.path().join("J/4/3,1.json");
        assert!(path.exists());

        let warm = JackStore::new(Some(dir.path().to_path_buf()));
        assert_eq!(warm.jack(&lambda), j);
        assert_eq!(warm.stats().disk_hits, 1);
        assert_eq!(warm.stats().computed, 0);

        // a tampered file is recomputed, not trusted
        let text = fs::read_to_string(&path)
            .unwrap()
            .replace("\"coeffs\":[24]", "\"coeffs\":[25]");
        fs::write(&path, text).unwrap();
        let again = JackStore::new(Some(dir.path().to_path_buf()));
        assert_eq!(again.jack(&lambda), j);
        assert_eq!(again.stats().disk_rejected, 1);
        assert_eq!(again.stats().computed, 1);

        fs::write(&path, "not json").unwrap();
        let broken = JackStore::new(Some(dir.path().to_path_buf()));
        assert_eq!(broken.jack(&lambda), j);
        assert_eq!(broken.stats().disk_rejected, 1);
    }

    #[test]
    fn memory_hits() {
        let store = JackStore::new(None);
        store.jack(&p("2"));
        store.jack(&p("2"));
        assert_eq!(store.stats().memory_hits, 1);
        assert_eq!(
            store.g(&p("2"), &p("1"), &p("1")).unwrap(),
            "2α^2".parse().unwrap()
        );
        assert!(store.g(&p("2"), &p("2"), &p("1")).unwrap().is_zero());
        let before = store.stats().computed;
        store.clear_memory();
        store.jack(&p("2"));
        assert_eq!(store.stats().computed, before + 1);
    }
}
