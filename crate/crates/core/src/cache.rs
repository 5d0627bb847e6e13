//! Persistent store for dominant-character tables.
//!
//! One file per `(group, highest weight)` key:
//!
//! ```text
//! LFCACHE v1 <group> <w1,w2,...>
//! <c1,c2,...> : <multiplicity>
//! ...
//! checksum <sha256 of the body lines, hex>
//! ```
//!
//! Files are written to a temporary name and renamed into place, so concurrent writers never
//! expose a partial entry. Entries are never rewritten once present.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use parking_lot::RwLock;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rootdata::Weight;

pub const CACHE_VERSION: &str = "v1";
pub const CACHE_ENV: &str = "LIE_PSI_CACHE_DIR";

static INSTALLED: RwLock<Option<Option<CharCache>>> = RwLock::new(None);

#[derive(Clone, Debug)]
pub struct CharCache {
    dir: PathBuf,
}

/// A decoded cache entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub group: String,
    pub highest: Weight,
    pub payload: Vec<(Weight, BigInt)>,
}

fn coords(w: &[i64]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_coords(s: &str) -> Option<Weight> {
    s.trim().split(',').map(|x| x.trim().parse().ok()).collect()
}

fn body_lines(payload: &[(Weight, BigInt)]) -> Vec<String> {
    payload.iter().map(|(w, m)| format!("{} : {}", coords(w), m)).collect()
}

fn checksum(lines: &[String]) -> String {
    let mut h = Sha256::new();
    for l in lines {
        h.update(l.as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

impl CacheEntry {
    pub fn encode(&self) -> String {
        let body = body_lines(&self.payload);
        let mut out = format!("LFCACHE {} {} {}\n", CACHE_VERSION, self.group, coords(&self.highest));
        for l in &body {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str(&format!("checksum {}\n", checksum(&body)));
        out
    }

    pub fn decode(text: &str, path: &str) -> Result<CacheEntry> {
        let corrupt = |reason: &str| Error::CacheCorrupt { path: path.to_string(), reason: reason.to_string() };
        let mut lines: Vec<&str> = text.lines().collect();
        if lines.len() < 2 {
            return Err(corrupt("truncated"));
        }
        let header: Vec<&str> = lines[0].split_whitespace().collect();
        if header.len() != 4 || header[0] != "LFCACHE" {
            return Err(corrupt("bad header"));
        }
        if header[1] != CACHE_VERSION {
            return Err(corrupt("unsupported version"));
        }
        let highest = parse_coords(header[3]).ok_or_else(|| corrupt("bad highest weight"))?;
        let last = lines.pop().unwrap();
        let sum = last.strip_prefix("checksum ").ok_or_else(|| corrupt("missing checksum"))?;
        let body: Vec<String> = lines[1..].iter().map(|s| s.to_string()).collect();
        if checksum(&body) != sum.trim() {
            return Err(corrupt("checksum mismatch"));
        }
        let mut payload = Vec::with_capacity(body.len());
        for l in &body {
            let (w, m) = l.split_once(':').ok_or_else(|| corrupt("bad body line"))?;
            let w = parse_coords(w).ok_or_else(|| corrupt("bad weight"))?;
            let m: BigInt = m.trim().parse().map_err(|_| corrupt("bad multiplicity"))?;
            payload.push((w, m));
        }
        Ok(CacheEntry { group: header[2].to_string(), highest, payload })
    }
}

impl CharCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<CharCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(CharCache { dir })
    }

    /// Directory from the environment override, if set.
    pub fn from_env() -> Result<Option<CharCache>> {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Ok(Some(CharCache::new(PathBuf::from(d))?)),
            _ => Ok(None),
        }
    }

    /// Cache used by newly built groups: the one installed with [`CharCache::install`],
    /// otherwise the environment override.
    pub fn process_default() -> Option<CharCache> {
        if let Some(c) = INSTALLED.read().as_ref() {
            return c.clone();
        }
        CharCache::from_env().ok().flatten()
    }

    /// Makes `cache` the default for groups built from now on; `None` disables caching.
    pub fn install(cache: Option<CharCache>) {
        *INSTALLED.write() = Some(cache);
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, group: &str, highest: &[i64]) -> PathBuf {
        let w = highest.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_");
        self.dir.join(format!("{group}__{w}.lfc"))
    }

    pub fn load(&self, group: &str, highest: &[i64]) -> Result<Option<CacheEntry>> {
        let path = self.path(group, highest);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let p = path.display().to_string();
        let entry = CacheEntry::decode(&text, &p)?;
        if entry.group != group || entry.highest != highest {
            return Err(Error::CacheCorrupt { path: p, reason: "key does not match file name".into() });
        }
        Ok(Some(entry))
    }

    pub fn store(&self, entry: &CacheEntry) -> Result<()> {
        let path = self.path(&entry.group, &entry.highest);
        if path.exists() {
            return Ok(());
        }
        let tmp = self.dir.join(format!(
            ".{}.{}.{:?}.tmp",
            path.file_name().unwrap().to_string_lossy(),
            std::process::id(),
            std::thread::current().id()
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(entry.encode().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry() -> CacheEntry {
        CacheEntry {
            group: "A1".into(),
            highest: vec![2],
            payload: vec![(vec![2], BigInt::from(1)), (vec![0], BigInt::from(1))],
        }
    }

    #[test]
    fn round_trip() {
        let e = entry();
        assert_eq!(CacheEntry::decode(&e.encode(), "x").unwrap(), e);
    }

    #[test]
    fn tampering_detected() {
        let text = entry().encode().replace("0 : 1", "0 : 2");
        assert!(matches!(CacheEntry::decode(&text, "x"), Err(Error::CacheCorrupt { .. })));
        let text = entry().encode().replace("v1", "v9");
        assert!(CacheEntry::decode(&text, "x").is_err());
    }
}
