//! Minimal primes of `J_G` from cut sets, with heights, dimension and unmixedness.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// `S` together with the components of the restriction of `G` to `[n] \ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSet {
    pub set: VertexSet,
    pub components: Vec<VertexSet>,
}

impl CutSet {
    pub fn c(&self) -> usize {
        self.components.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPrime {
    pub cutset: CutSet,
    pub height: usize,
}

impl MinimalPrime {
    pub fn new(n: usize, cutset: CutSet) -> Self {
        let height = n - cutset.c() + cutset.set.len();
        MinimalPrime { cutset, height }
    }
}

/// `{S:[...], c:k, height:h}` with 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeRecord {
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub c: usize,
    pub height: usize,
}

impl From<&MinimalPrime> for PrimeRecord {
    fn from(p: &MinimalPrime) -> Self {
        PrimeRecord { s: p.cutset.set.labels(), c: p.cutset.c(), height: p.height }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionSummary {
    pub primes: Vec<MinimalPrime>,
    pub height_ideal: usize,
    pub dim_quotient: usize,
    pub unmixed: bool,
}

/// True when `P_S(G)` is a minimal prime: `S` empty, or removing any element
/// of `S` from `S` lowers the component count.
pub fn is_cut_set(g: &Graph, s: VertexSet) -> bool {
    if s.is_empty() {
        return true;
    }
    let all = g.vertices();
    let c = g.component_count_within(all.difference(s));
    s.iter().all(|i| g.component_count_within(all.difference(s.without(i))) < c)
}

/// Every `S` indexing a minimal prime, sorted by `(|S|, bitmask)`.
pub fn cut_sets(g: &Graph) -> Vec<CutSet> {
    let all = g.vertices();
    let mut out: Vec<CutSet> = (0..1u64 << g.n())
        .map(VertexSet)
        .filter(|&s| is_cut_set(g, s))
        .map(|s| CutSet { set: s, components: g.components_within(all.difference(s)) })
        .collect();
    out.sort_by_key(|c| (c.set.len(), c.set.0));
    out
}

pub fn minimal_primes(g: &Graph) -> DecompositionSummary {
    let n = g.n();
    let primes: Vec<MinimalPrime> = cut_sets(g).into_iter().map(|c| MinimalPrime::new(n, c)).collect();
    let height_ideal = primes.iter().map(|p| p.height).min().unwrap_or(0);
    let unmixed = primes.iter().all(|p| p.height == height_ideal);
    DecompositionSummary { primes, height_ideal, dim_quotient: 2 * n - height_ideal, unmixed }
}

/// All minimal primes have the same height.
pub fn is_unmixed(g: &Graph) -> bool {
    minimal_primes(g).unmixed
}

/// The connected-graph criterion: every cut set has `c(S) = |S| + 1`.
pub fn unmixed_by_cut_sets(g: &Graph) -> bool {
    cut_sets(g).iter().all(|c| c.c() == c.set.len() + 1)
}
