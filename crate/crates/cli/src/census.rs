//! The census: one JSONL record per connected isomorphism class with edges,
//! sorted by `(n, canonical form)`, with an index sidecar that doubles as a
//! cache keyed by canonical form and pipeline version.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use bei_core::canon::enumerate_connected;
use bei_core::invariants::{InvariantOptions, MAX_COMPONENT_N, MAX_COMPONENT_N_BEST_EFFORT};
use bei_core::{Error, Graph};

use crate::error::{HarnessError, HarnessResult};
use crate::record::census_record;
use crate::workers::pool;

/// Bump whenever a change to the pipeline could alter any record.
pub const PIPELINE_REVISION: u32 = 1;

/// Hex SHA-256 over everything that determines record contents.
pub fn pipeline_hash() -> String {
    let mut h = Sha256::new();
    h.update(format!(
        "bei-census revision={PIPELINE_REVISION} version={} homology=rational order=lex-x-then-y",
        env!("CARGO_PKG_VERSION")
    ));
    hex::encode(h.finalize())
}

#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    pub max_n: usize,
    pub workers: usize,
    pub best_effort: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub records: usize,
    pub reused: usize,
    pub computed: usize,
    pub per_n: BTreeMap<usize, usize>,
}

#[derive(Serialize, Deserialize)]
struct IndexEntry {
    graph6: String,
    offset: usize,
    len: usize,
}

#[derive(Serialize, Deserialize)]
struct Index {
    pipeline: String,
    entries: Vec<IndexEntry>,
}

pub fn index_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".idx");
    PathBuf::from(s)
}

/// Connected classes with at least one edge, `n = 2..=max_n`, in census order.
pub fn census_classes(max_n: usize, best_effort: bool) -> HarnessResult<Vec<Graph>> {
    let cap = if best_effort { MAX_COMPONENT_N_BEST_EFFORT } else { MAX_COMPONENT_N };
    if max_n > cap {
        return Err(Error::TierExceeded { what: "census max_n", value: max_n, max: cap }.into());
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.extend(enumerate_connected(n)?);
    }
    Ok(out)
}

/// Lines of a previous run under the same pipeline hash, keyed by graph6.
/// Anything unreadable or stale yields an empty cache.
fn load_cache(out: &Path) -> HashMap<String, String> {
    let mut cache = HashMap::new();
    let (Ok(idx), Ok(body)) = (fs::read(index_path(out)), fs::read(out)) else {
        return cache;
    };
    let Ok(index) = serde_json::from_slice::<Index>(&idx) else {
        return cache;
    };
    if index.pipeline != pipeline_hash() {
        return cache;
    }
    for e in index.entries {
        let Some(bytes) = body.get(e.offset..e.offset + e.len) else { continue };
        let Ok(line) = std::str::from_utf8(bytes) else { continue };
        let matches = serde_json::from_str::<serde_json::Value>(line)
            .ok()
            .and_then(|v| v.get("graph6").and_then(|g| g.as_str()).map(|g| g == e.graph6))
            .unwrap_or(false);
        if matches {
            cache.insert(e.graph6, line.to_string());
        }
    }
    cache
}

fn write_atomic(path: &Path, bytes: &[u8]) -> HarnessResult<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, bytes).map_err(HarnessError::io(&tmp))?;
    fs::rename(&tmp, path).map_err(HarnessError::io(path))
}

/// Runs the census and writes `out` plus `out.idx`.
pub fn run_census(opts: CensusOptions, out: &Path) -> HarnessResult<CensusSummary> {
    let classes = census_classes(opts.max_n, opts.best_effort)?;
    let keys: Vec<String> = classes.iter().map(bei_core::graph6::encode_string).collect();
    let cache = load_cache(out);
    let inv_opts = InvariantOptions { best_effort: opts.best_effort, parallel: false };

    // Graphs are independent; the indexed collect is the deterministic merge.
    let lines: Vec<(String, bool)> = pool(opts.workers).install(|| {
        classes
            .par_iter()
            .zip(keys.par_iter())
            .map(|(g, key)| match cache.get(key) {
                Some(line) => Ok((line.clone(), true)),
                None => {
                    let rec = census_record(g, inv_opts)?;
                    debug_assert_eq!(&rec.graph6, key);
                    Ok((serde_json::to_string(&rec).expect("records serialize"), false))
                }
            })
            .collect::<Result<Vec<_>, Error>>()
    })?;

    let mut summary = CensusSummary::default();
    let mut body = String::new();
    let mut entries = Vec::with_capacity(lines.len());
    for ((line, reused), (g, key)) in lines.into_iter().zip(classes.iter().zip(keys)) {
        entries.push(IndexEntry { graph6: key, offset: body.len(), len: line.len() });
        body.push_str(&line);
        body.push('\n');
        summary.records += 1;
        *summary.per_n.entry(g.n()).or_default() += 1;
        if reused {
            summary.reused += 1;
        } else {
            summary.computed += 1;
        }
    }
    write_atomic(out, body.as_bytes())?;
    let index = Index { pipeline: pipeline_hash(), entries };
    write_atomic(&index_path(out), &serde_json::to_vec(&index).expect("index serializes"))?;
    Ok(summary)
}
