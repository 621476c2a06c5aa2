//! Append-only JSON-lines result cache.

use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub g: i64,
    pub r: i64,
    pub d: Option<i64>,
    pub command: String,
    pub version: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: CacheKey,
    pub payload: Value,
    pub timestamp: u64,
}

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    /// `$NILCONE_CACHE`, else `<data dir>/nilcone/cache.jsonl`.
    pub fn from_env() -> Option<Cache> {
        let path = match std::env::var_os("NILCONE_CACHE") {
            Some(p) if !p.is_empty() => PathBuf::from(p),
            _ => dirs::data_dir()?.join("nilcone").join("cache.jsonl"),
        };
        Some(Cache { path })
    }

    /// The most recent record for `key`. Unreadable files and lines that do
    /// not parse are treated as misses.
    pub fn get(&self, key: &CacheKey) -> Option<Value> {
        let file = fs::File::open(&self.path).ok()?;
        BufReader::new(file)
            .lines()
            .map_while(|l| l.ok())
            .filter_map(|line| serde_json::from_str::<CacheRecord>(&line).ok())
            .filter(|rec| rec.key == *key)
            .last()
            .map(|rec| rec.payload)
    }

    pub fn put(&self, key: CacheKey, payload: &Value) -> Result<(), CliError> {
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir)?;
        }
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        let record = CacheRecord { key, payload: payload.clone(), timestamp };
        let mut line = serde_json::to_string(&record)?;
        line.push('\n');
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.write_all(line.as_bytes())?;
        Ok(())
    }
}
