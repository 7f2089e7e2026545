//! Every isomorphism class up to a vertex bound, with invariants computed once
//! and shared by all theorem scans.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use rayon::ThreadPool;

use bei_core::canon::{canonical_form, enumerate_all};
use bei_core::invariants::{invariants_with, InvariantOptions, InvariantRecord, MAX_COMPONENT_N};
use bei_core::{Error, Graph, Result};

use crate::workers::pool;

pub struct Entry {
    pub graph: Graph,
    pub graph6: String,
    pub inv: InvariantRecord,
}

struct Loaded {
    entries: Vec<Entry>,
    by_graph6: HashMap<String, usize>,
}

pub struct Corpus {
    max_n: usize,
    pool: ThreadPool,
    loaded: OnceLock<Result<Loaded>>,
}

impl Corpus {
    pub fn new(max_n: usize, workers: usize) -> Result<Corpus> {
        if max_n == 0 {
            return Err(Error::VertexCount(0));
        }
        bei_core::error::tier("corpus vertex count", max_n, MAX_COMPONENT_N)?;
        Ok(Corpus { max_n, pool: pool(workers), loaded: OnceLock::new() })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }

    fn load(&self) -> Result<&Loaded> {
        let loaded = self.loaded.get_or_init(|| {
            let mut graphs = Vec::new();
            for n in 1..=self.max_n {
                graphs.extend(enumerate_all(n)?);
            }
            let entries = self.pool.install(|| {
                graphs
                    .into_par_iter()
                    .map(|graph| {
                        let inv = invariants_with(&graph, InvariantOptions::default())?;
                        let graph6 = bei_core::graph6::encode_string(&graph);
                        Ok(Entry { graph, graph6, inv })
                    })
                    .collect::<Result<Vec<_>>>()
            })?;
            let by_graph6 = entries.iter().enumerate().map(|(k, e)| (e.graph6.clone(), k)).collect();
            Ok(Loaded { entries, by_graph6 })
        });
        loaded.as_ref().map_err(Clone::clone)
    }

    /// All classes with `n ≤ max_n`, ordered by `(n, canonical form)`.
    pub fn entries(&self, max_n: usize) -> Result<impl Iterator<Item = &Entry>> {
        bei_core::error::tier("scan vertex count", max_n, self.max_n)?;
        Ok(self.load()?.entries.iter().filter(move |e| e.graph.n() <= max_n))
    }

    /// Connected classes with at least one edge.
    pub fn connected(&self, max_n: usize) -> Result<impl Iterator<Item = &Entry>> {
        Ok(self.entries(max_n)?.filter(|e| e.graph.is_connected() && e.graph.edge_count() > 0))
    }

    /// The entry of the class of `g`, in any labeling.
    pub fn lookup(&self, g: &Graph) -> Result<&Entry> {
        let loaded = self.load()?;
        let key = String::from_utf8(canonical_form(g)?).expect("graph6 is ASCII");
        loaded.by_graph6.get(&key).map(|&k| &loaded.entries[k]).ok_or(Error::TierExceeded {
            what: "corpus lookup vertex count",
            value: g.n(),
            max: self.max_n,
        })
    }
}
