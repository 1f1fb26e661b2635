//! On-disk store of family expansions, one JSON document per `(family, params)`.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::FamilySpec;
use crate::error::{Error, Result};
use crate::qseries::Series;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "HABIRO_CACHE_DIR";

static WRITE_LOCK: Mutex<()> = Mutex::new(());

#[derive(Serialize, Deserialize)]
struct Entry {
    family: String,
    params: BTreeMap<String, u32>,
    #[serde(rename = "N")]
    n: usize,
    coefficients: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SeriesCache {
    dir: PathBuf,
}

impl SeriesCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SeriesCache { dir: dir.into() }
    }

    /// The directory from the environment, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_DIR_ENV).map(SeriesCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, spec: &FamilySpec) -> PathBuf {
        let mut name = spec.name().to_string();
        for (k, v) in spec.params() {
            name.push_str(&format!("_{k}{v}"));
        }
        self.dir.join(format!("{name}.json"))
    }

    /// The cached coefficients, however many there are.
    pub fn load(&self, spec: &FamilySpec) -> Result<Option<Series>> {
        let path = self.path(spec);
        if !path.exists() {
            return Ok(None);
        }
        let entry: Entry = serde_json::from_str(&fs::read_to_string(&path)?)?;
        if entry.family != spec.name() || entry.params != spec.params() || entry.coefficients.len() != entry.n + 1 {
            return Err(Error::Cache(format!("{} does not match {spec}", path.display())));
        }
        let coeffs = entry
            .coefficients
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|e| Error::Cache(format!("{}: {e}", path.display()))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(Series::new(0, coeffs, entry.n as i64)))
    }

    pub fn store(&self, spec: &FamilySpec, xi: &Series) -> Result<()> {
        let _guard = WRITE_LOCK.lock().map_err(|_| Error::Cache("cache lock poisoned".into()))?;
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            family: spec.name().to_string(),
            params: spec.params(),
            n: xi.order().max(0) as usize,
            coefficients: xi.dense().iter().map(|c| c.to_string()).collect(),
        };
        let path = self.path(spec);
        // write-then-rename so readers never observe a partial document
        let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
        let mut file = fs::File::create(&tmp)?;
        file.write_all(serde_json::to_string(&entry)?.as_bytes())?;
        file.sync_all()?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// `xi(0..=n_max)`, served from the cache when it is long enough and
    /// recomputed (then stored) otherwise.
    pub fn expand(&self, spec: &FamilySpec, n_max: usize) -> Result<Series> {
        spec.validate()?;
        if let Some(s) = self.load(spec)? {
            if s.order() >= n_max as i64 {
                return Ok(s.truncate(n_max as i64));
            }
        }
        let s = spec.expand(n_max)?;
        self.store(spec, &s)?;
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_prefix() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SeriesCache::new(dir.path());
        let spec = FamilySpec::TorusKnot2 { m: 2, ell: 1 };
        assert!(cache.load(&spec).unwrap().is_none());
        let long = cache.expand(&spec, 8).unwrap();
        assert_eq!(cache.load(&spec).unwrap().unwrap(), long);
        let short = cache.expand(&spec, 4).unwrap();
        assert_eq!(short, spec.expand(4).unwrap());
        let longer = cache.expand(&spec, 10).unwrap();
        assert_eq!(longer.truncate(8), long);
        assert_eq!(cache.load(&spec).unwrap().unwrap().order(), 10);
    }

    #[test]
    fn mismatched_file_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SeriesCache::new(dir.path());
        let a = FamilySpec::HabiroG { k: 1 };
        cache.expand(&a, 3).unwrap();
        let text = fs::read_to_string(cache.path(&a)).unwrap().replace("habiro-g", "torus2");
        fs::write(cache.path(&a), text).unwrap();
        assert!(matches!(cache.load(&a), Err(Error::Cache(_))));
    }
}
