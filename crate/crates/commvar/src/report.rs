//! Line-delimited structured records and a small file cache for
//! expensive counts. One record per line, `key=value` pairs separated by
//! single spaces; parsing and re-emitting a record is byte-identical.

use std::fs;
use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed record field `{0}` (expected key=value)")]
    BadField(String),
    #[error("record values must not contain spaces or newlines: `{0}`")]
    BadValue(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// An ordered list of key=value pairs; order is preserved on output.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Record {
    pairs: Vec<(String, String)>,
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn push(mut self, key: &str, value: impl ToString) -> Self {
        self.pairs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn to_line(&self) -> Result<String, ReportError> {
        let mut parts = Vec::with_capacity(self.pairs.len());
        for (k, v) in &self.pairs {
            if k.contains([' ', '\n', '=']) || v.contains([' ', '\n']) {
                return Err(ReportError::BadValue(format!("{k}={v}")));
            }
            parts.push(format!("{k}={v}"));
        }
        Ok(parts.join(" "))
    }

    pub fn parse_line(line: &str) -> Result<Record, ReportError> {
        let mut pairs = Vec::new();
        for field in line.split(' ') {
            let Some((k, v)) = field.split_once('=') else {
                return Err(ReportError::BadField(field.to_string()));
            };
            pairs.push((k.to_string(), v.to_string()));
        }
        Ok(Record { pairs })
    }
}

fn fnv64(data: &str) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for b in data.bytes() {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn sanitize(key: &str) -> String {
    key.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .take(48)
        .collect()
}

/// Content-addressed cache directory: one record line per key. The cache
/// only memoizes; answers are identical with it cold or warm.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir
            .join(format!("{}-{:016x}.rec", sanitize(key), fnv64(key)))
    }

    pub fn lookup(&self, key: &str) -> Option<Record> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        Record::parse_line(text.trim_end_matches('\n')).ok()
    }

    pub fn store(&self, key: &str, record: &Record) -> Result<(), ReportError> {
        fs::create_dir_all(&self.dir)?;
        fs::write(self.path_for(key), format!("{}\n", record.to_line()?))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trip() {
        let rec = Record::new()
            .push("spec", "nilcone+nilcone:n3")
            .push("track", "pointcount")
            .push("q", 3)
            .push("count", 288_u64);
        let line = rec.to_line().unwrap();
        let back = Record::parse_line(&line).unwrap();
        assert_eq!(back.to_line().unwrap(), line);
        assert_eq!(back.get("q"), Some("3"));
        assert_eq!(back.get("missing"), None);
    }

    #[test]
    fn rejects_spaces_in_values() {
        let rec = Record::new().push("dim", "4 5");
        assert!(rec.to_line().is_err());
        assert!(Record::parse_line("no-equals-sign").is_err());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let key = "count|zsub+zsub:n3|q=5|budget=500000000|v1";
        assert!(cache.lookup(key).is_none());
        let rec = Record::new().push("count", 18625_u64);
        cache.store(key, &rec).unwrap();
        assert_eq!(cache.lookup(key).unwrap(), rec);
        // differing keys do not collide
        assert!(cache.lookup("count|other|v1").is_none());
    }
}
