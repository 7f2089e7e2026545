//! Oracle campaigns: symbolic cross-checks over many small labeled graphs,
//! recorded as `{graph6, labeling, check, ok}` fixture lines.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use bei_core::canon::{canonical_form, enumerate_connected};
use bei_core::graph6::to_edge_list;
use bei_core::oracle::{verify_colon_theorem, verify_initial_ideal, verify_ohtani, verify_primary_decomposition};
use bei_core::{Graph, Result};

use crate::error::HarnessError;

/// All labelings up to this many vertices.
pub const MAX_LABELED_N: usize = 4;
/// Random labelings of every class at this size, for the lex check only.
pub const SAMPLED_N: usize = 5;
pub const SAMPLE_SEED: u64 = 0x6265_6935;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    PrimaryDecomposition,
    Colon,
    Initial,
    Ohtani,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::PrimaryDecomposition, Check::Colon, Check::Initial, Check::Ohtani];

    pub fn name(self) -> &'static str {
        match self {
            Check::PrimaryDecomposition => "primary-decomposition",
            Check::Colon => "colon",
            Check::Initial => "initial",
            Check::Ohtani => "ohtani",
        }
    }

    /// Largest vertex count the check accepts.
    pub fn max_n(self) -> usize {
        match self {
            Check::Initial => SAMPLED_N,
            _ => MAX_LABELED_N,
        }
    }

    /// One entry per instance: the edge or cut vertex checked (if any) and the verdict.
    pub fn run(self, g: &Graph) -> Result<Vec<(Option<String>, bool)>> {
        match self {
            Check::PrimaryDecomposition => Ok(vec![(None, verify_primary_decomposition(g)?)]),
            Check::Initial => Ok(vec![(None, verify_initial_ideal(g)?)]),
            Check::Colon => g
                .edges()
                .into_iter()
                .map(|(i, j)| Ok((Some(format!("{}-{}", i + 1, j + 1)), verify_colon_theorem(g, i, j)?)))
                .collect(),
            Check::Ohtani => (0..g.n())
                .filter(|&v| g.is_cut_vertex(v))
                .map(|v| Ok((Some((v + 1).to_string()), verify_ohtani(g, v)?)))
                .collect(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = HarnessError;

    fn from_str(s: &str) -> std::result::Result<Check, HarnessError> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| HarnessError::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureRecord {
    /// Canonical form of the class.
    pub graph6: String,
    /// The labeled instance, as `n;a-b,...`.
    pub labeling: String,
    pub check: Check,
    /// Edge `a-b` or cut vertex label, when the check is local.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
    pub ok: bool,
}

/// Every connected graph on the vertex set `[n]`.
pub fn connected_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let mut g = Graph::empty(n);
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g = g.with_edge(i, j);
                }
            }
            g
        })
        .filter(Graph::is_connected)
        .collect()
}

/// One random relabeling of each connected class on `n` vertices, seeded.
pub fn sampled_labelings(n: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(enumerate_connected(n)?
        .into_iter()
        .map(|g| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            g.relabel(&perm)
        })
        .collect())
}

/// The campaign's graphs: all connected labelings up to `min(max_n, 4)`, then
/// sampled labelings at `n = 5` when the check allows it.
pub fn campaign_graphs(check: Check, max_n: usize) -> Result<Vec<Graph>> {
    bei_core::error::tier("oracle vertex count", max_n, check.max_n())?;
    let mut graphs = Vec::new();
    for n in 1..=max_n.min(MAX_LABELED_N) {
        graphs.extend(connected_labeled_graphs(n));
    }
    if max_n >= SAMPLED_N {
        graphs.extend(sampled_labelings(SAMPLED_N, SAMPLE_SEED)?);
    }
    Ok(graphs)
}

/// Runs `check` on each graph; the output order follows the input order.
pub fn run_checks(check: Check, graphs: &[Graph]) -> Result<Vec<FixtureRecord>> {
    let per_graph = graphs
        .par_iter()
        .map(|g| {
            let graph6 = String::from_utf8(canonical_form(g)?).expect("graph6 is ASCII");
            let labeling = to_edge_list(g);
            Ok(check
                .run(g)?
                .into_iter()
                .map(|(at, ok)| FixtureRecord { graph6: graph6.clone(), labeling: labeling.clone(), check, at, ok })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_graph.into_iter().flatten().collect())
}

pub fn run_campaign(check: Check, max_n: usize) -> Result<Vec<FixtureRecord>> {
    run_checks(check, &campaign_graphs(check, max_n)?)
}

pub fn fixture_jsonl(records: &[FixtureRecord]) -> String {
    records.iter().map(|r| serde_json::to_string(r).expect("fixtures serialize") + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| connected_labeled_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38]);
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("groebner".parse::<Check>().is_err());
    }

    #[test]
    fn tiers() {
        assert!(campaign_graphs(Check::Colon, 5).is_err());
        assert_eq!(campaign_graphs(Check::Initial, 5).unwrap().len(), 44 + 21);
    }

    #[test]
    fn three_vertex_fixtures() {
        let recs = run_campaign(Check::Colon, 3).unwrap();
        // 3 paths with 2 edges each, one triangle with 3.
        assert_eq!(recs.len(), 1 + 3 * 2 + 3);
        assert!(recs.iter().all(|r| r.ok));
        let line = fixture_jsonl(&recs[..1]);
        assert_eq!(line, "{\"graph6\":\"A_\",\"labeling\":\"2;1-2\",\"check\":\"colon\",\"at\":\"1-2\",\"ok\":true}\n");
    }
}
