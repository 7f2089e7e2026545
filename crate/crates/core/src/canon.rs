//! Canonical forms and isomorphism-free enumeration of small graphs.
//!
//! The canonical form of a graph is the lexicographically least graph6 string
//! over all relabelings. The search assigns vertices to positions one at a
//! time; placing a vertex at position `j` fixes the graph6 column `j`, so at
//! every node only the vertices producing the least column can lead to the
//! minimum, and a branch is cut as soon as its prefix exceeds the best found.

use std::collections::BTreeMap;

use crate::error::{tier, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6;

pub const MAX_CANONICAL_N: usize = 10;
pub const MAX_ENUMERATION_N: usize = 8;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    perm: Vec<usize>,
    cols: Vec<u64>,
    best_perm: Vec<usize>,
    best_cols: Vec<u64>,
    found: bool,
}

impl Search<'_> {
    fn column(&self, depth: usize, w: usize) -> u64 {
        let nb = self.g.neighbors(w);
        let mut col = 0u64;
        for &p in &self.perm[..depth] {
            col = col << 1 | nb.contains(p) as u64;
        }
        col
    }

    fn descend(&mut self, depth: usize, free: VertexSet) {
        if depth == self.n {
            if !self.found || self.cols < self.best_cols {
                self.best_cols.clone_from(&self.cols);
                self.best_perm.clone_from(&self.perm);
                self.found = true;
            }
            return;
        }
        let mut least = u64::MAX;
        let mut cands = Vec::new();
        for w in free.iter() {
            let c = self.column(depth, w);
            if c < least {
                least = c;
                cands.clear();
            }
            if c == least {
                cands.push(w);
            }
        }
        self.cols[depth] = least;
        for w in cands {
            // Re-checked per sibling: a completed sibling may have lowered the best.
            if self.found && self.cols[..=depth] > self.best_cols[..=depth] {
                return;
            }
            self.perm[depth] = w;
            self.descend(depth + 1, free.without(w));
            self.cols[depth] = least;
        }
    }
}

/// A relabeling `perm` such that `g.relabel(&perm)` is the canonical representative.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    tier("canonical form vertex count", g.n(), MAX_CANONICAL_N)?;
    let n = g.n();
    let mut s =
        Search { g, n, perm: vec![0; n], cols: vec![0; n], best_perm: Vec::new(), best_cols: Vec::new(), found: false };
    s.descend(0, g.vertices());
    Ok(s.best_perm)
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(g.relabel(&canonical_labeling(g)?))
}

/// Least graph6 encoding over all vertex permutations.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(graph6::encode(&canonical_graph(g)?))
}

fn level(n: usize) -> BTreeMap<Vec<u8>, Graph> {
    let mut current: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1);
    current.insert(graph6::encode(&k1), k1);
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for h in current.values() {
            let edges = h.edges();
            for mask in 0u64..1 << (m - 1) {
                let mut e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect();
                e.extend(VertexSet(mask).iter().map(|u| (u + 1, m)));
                let g = Graph::from_edges(m, &e).expect("valid by construction");
                let c = canonical_graph(&g).expect("within tier");
                next.entry(graph6::encode(&c)).or_insert(c);
            }
        }
        current = next;
    }
    current
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices (connected or not), in canonical-form order.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    tier("enumeration vertex count", n, MAX_ENUMERATION_N)?;
    if n == 0 {
        return Err(crate::Error::VertexCount(0));
    }
    Ok(level(n).into_values().collect())
}

/// One canonical representative per isomorphism class of connected graphs on `n` vertices.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_all(n)?.into_iter().filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn isomorphic_paths_agree() {
        let a = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(3, &[(2, 1), (1, 3)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&Graph::complete(3)).unwrap());
    }

    #[test]
    fn tier_guard() {
        assert!(matches!(canonical_form(&Graph::path(11)), Err(Error::TierExceeded { .. })));
        assert!(matches!(enumerate_connected(9), Err(Error::TierExceeded { .. })));
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }
}
