//! Labeled simple graphs on at most 62 vertices, stored as adjacency bit rows.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 62;

/// A set of vertices as a bitmask (bit `v` is vertex `v`, 0-based).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

/// Serialized as its sorted 1-based labels.
impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// An induced subgraph together with the original index of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `labels[k]` is the vertex of the host graph that became vertex `k`.
    pub labels: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeEdit {
    Add,
    Delete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexStats {
    pub vertex: usize,
    pub degree: usize,
    pub alpha: usize,
    pub simplicial: bool,
    pub cut_vertex: bool,
}

/// A simple path, listed from its first to its last vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPath {
    pub vertices: Vec<usize>,
}

impl VertexPath {
    pub fn inner(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

/// A split of a connected graph at a vertex simplicial in both halves.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub vertex: usize,
    pub parts: [Subgraph; 2],
}

impl Graph {
    /// Builds a graph from 1-based labeled edges. Duplicate pairs are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            for label in [a, b] {
                if label == 0 || label > n {
                    return Err(Error::LabelOutOfRange { label, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            g.set_edge(a - 1, b - 1, true);
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!((1..=MAX_VERTICES).contains(&n), "vertex count {n} outside 1..=62");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        g
    }

    /// The path 0-1-...-(n-1).
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.set_edge(0, n - 1, true);
        g
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.set_edge(0, v, true);
        }
        g
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as 0-based pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u >> 1 << u << 1).iter() {
                out.push((u, v));
            }
        }
        out
    }

    fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        } else {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert_ne!(u, v);
        let mut g = self.clone();
        g.set_edge(u, v, true);
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.set_edge(u, v, false);
        g
    }

    /// Adds or deletes one edge, rejecting edits that would not change the edge set.
    pub fn toggle_edge(&self, u: usize, v: usize, mode: EdgeEdit) -> Result<Graph> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::LabelOutOfRange { label: x + 1, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u + 1));
        }
        match (mode, self.has_edge(u, v)) {
            (EdgeEdit::Add, true) => Err(Error::EdgePresent(u + 1, v + 1)),
            (EdgeEdit::Delete, false) => Err(Error::EdgeMissing(u + 1, v + 1)),
            (EdgeEdit::Add, false) => Ok(self.with_edge(u, v)),
            (EdgeEdit::Delete, true) => Ok(self.without_edge(u, v)),
        }
    }

    /// Removes every edge at `v`, keeping `v` as an isolated vertex.
    pub fn isolate(&self, v: usize) -> Graph {
        let mut g = self.clone();
        for u in self.neighbors(v).iter() {
            g.set_edge(u, v, false);
        }
        g
    }

    /// Graph whose vertex `k` is vertex `perm[k]` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (k, &v) in perm.iter().enumerate() {
            inv[v] = k;
        }
        let adj = perm.iter().map(|&v| VertexSet(self.adj[v]).iter().fold(0u64, |acc, u| acc | 1 << inv[u])).collect();
        Graph { n: self.n, adj }
    }

    /// Connected components of the subgraph induced on `within`, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = within.0;
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let mut next = 0u64;
                for u in VertexSet(frontier).iter() {
                    next |= self.adj[u];
                }
                next &= within.0 & !comp;
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn component_count_within(&self, within: VertexSet) -> usize {
        self.components_within(within).len()
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|u| set.without(u).is_subset(self.neighbors(u)))
    }

    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter().map(|u| (self.adj[u] & set.0).count_ones() as usize).sum::<usize>() / 2
    }

    /// Induced subgraph on `keep`, vertices renumbered in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Subgraph {
        let labels: Vec<usize> = keep.iter().collect();
        if labels.is_empty() {
            return Subgraph { graph: Graph { n: 0, adj: Vec::new() }, labels };
        }
        let adj = labels
            .iter()
            .map(|&v| {
                labels.iter().enumerate().filter(|&(_, &u)| self.has_edge(u, v)).fold(0u64, |acc, (k, _)| acc | 1 << k)
            })
            .collect();
        Subgraph { graph: Graph { n: labels.len(), adj }, labels }
    }

    /// Restriction to the vertices outside `removed`. Removing every vertex
    /// yields a zero-vertex graph.
    pub fn restriction(&self, removed: VertexSet) -> Subgraph {
        self.induced(self.vertices().difference(removed))
    }

    pub fn alpha(&self, v: usize) -> usize {
        let d = self.degree(v);
        d * d.saturating_sub(1) / 2 - self.edges_within(self.neighbors(v))
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(self.neighbors(v))
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let all = self.vertices();
        self.component_count_within(all.without(v)) > self.component_count_within(all)
    }

    pub fn vertex_stats(&self, v: usize) -> VertexStats {
        VertexStats {
            vertex: v,
            degree: self.degree(v),
            alpha: self.alpha(v),
            simplicial: self.is_simplicial(v),
            cut_vertex: self.is_cut_vertex(v),
        }
    }

    /// Minimum of `alpha` over the vertices outside `w`.
    pub fn alpha_min(&self, w: VertexSet) -> Result<usize> {
        self.vertices()
            .difference(w)
            .iter()
            .map(|v| self.alpha(v))
            .min()
            .ok_or_else(|| Error::Precondition("alpha_min needs a vertex outside W".into()))
    }

    fn complete_set(&mut self, set: VertexSet) {
        for u in set.iter() {
            self.adj[u] |= set.without(u).0;
        }
    }

    /// `G_v`: the neighborhood of `v` made into a clique.
    pub fn ohtani_completion(&self, v: usize) -> Graph {
        let mut g = self.clone();
        g.complete_set(self.neighbors(v));
        g
    }

    /// `H_e` for `e = {i, j}`: both neighborhoods made into cliques. `e` need not be an edge.
    pub fn edge_completion(&self, i: usize, j: usize) -> Graph {
        assert_ne!(i, j);
        let mut g = self.clone();
        g.complete_set(self.neighbors(i));
        g.complete_set(self.neighbors(j));
        g
    }

    /// All simple paths from `i` to `j` in lexicographic order.
    pub fn simple_paths(&self, i: usize, j: usize, require_inner: bool) -> Vec<VertexPath> {
        assert_ne!(i, j);
        let mut out = Vec::new();
        let mut stack = vec![i];
        self.paths_dfs(j, VertexSet::singleton(i), &mut stack, &mut out);
        if require_inner {
            out.retain(|p| p.vertices.len() > 2);
        }
        out
    }

    fn paths_dfs(&self, target: usize, seen: VertexSet, stack: &mut Vec<usize>, out: &mut Vec<VertexPath>) {
        let last = *stack.last().unwrap();
        for w in self.neighbors(last).difference(seen).iter() {
            stack.push(w);
            if w == target {
                out.push(VertexPath { vertices: stack.clone() });
            } else {
                self.paths_dfs(target, seen.with(w), stack, out);
            }
            stack.pop();
        }
    }

    /// Every vertex at which the graph is decomposable, with the two halves.
    ///
    /// A witness `v` must leave exactly two components in `G - v`: with three or
    /// more, one half would hold two of them and the neighborhood of `v` there
    /// could not be a clique.
    pub fn decomposition_witnesses(&self) -> Result<Vec<Decomposition>> {
        if self.n < 2 {
            return Err(Error::Precondition("decomposability needs n >= 2".into()));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut out = Vec::new();
        for v in 0..self.n {
            let comps = self.components_within(self.vertices().without(v));
            if comps.len() != 2 {
                continue;
            }
            let nv = self.neighbors(v);
            if comps.iter().all(|&c| self.is_clique(nv.intersection(c))) {
                out.push(Decomposition {
                    vertex: v,
                    parts: [self.induced(comps[0].with(v)), self.induced(comps[1].with(v))],
                });
            }
        }
        Ok(out)
    }

    pub fn is_decomposable(&self) -> Result<Option<Decomposition>> {
        Ok(self.decomposition_witnesses()?.into_iter().next())
    }

    /// Splits recursively until every piece is indecomposable, always taking the first witness.
    pub fn decompose_fully(&self) -> Result<Vec<Subgraph>> {
        self.decompose_fully_with(&mut |_| 0)
    }

    /// As [`Graph::decompose_fully`], with `choose(k)` picking one of `k` witnesses.
    pub fn decompose_fully_with(&self, choose: &mut dyn FnMut(usize) -> usize) -> Result<Vec<Subgraph>> {
        let root = Subgraph { graph: self.clone(), labels: (0..self.n).collect() };
        let mut pieces = Vec::new();
        let mut todo = vec![root];
        while let Some(sub) = todo.pop() {
            let witnesses = if sub.graph.n >= 2 { sub.graph.decomposition_witnesses()? } else { Vec::new() };
            if witnesses.is_empty() {
                pieces.push(sub);
                continue;
            }
            let pick = choose(witnesses.len()).min(witnesses.len() - 1);
            let Decomposition { parts, .. } = witnesses.into_iter().nth(pick).unwrap();
            for part in parts {
                let labels = part.labels.iter().map(|&k| sub.labels[k]).collect();
                todo.push(Subgraph { graph: part.graph, labels });
            }
        }
        pieces.sort_by(|a, b| a.labels.cmp(&b.labels));
        Ok(pieces)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None::<bool>; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u).iter() {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Connected, acyclic, maximum degree at most two.
    pub fn is_path_graph(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1 && self.max_degree() <= 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::graph6::to_edge_list(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn triangle_pendant() -> Graph {
        Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    fn set(labels: &[usize]) -> VertexSet {
        labels.iter().map(|l| l - 1).collect()
    }

    #[test]
    fn build_graph_examples() {
        let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(p3, Graph::path(3));
        let tp = triangle_pendant();
        assert_eq!(tp.edge_count(), 4);
        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((single.n(), single.edge_count()), (1, 0));
        let dup = Graph::from_edges(3, &[(1, 2), (2, 1), (2, 3), (1, 2)]).unwrap();
        assert_eq!(dup, p3);
    }

    #[test]
    fn build_graph_errors() {
        assert_eq!(Graph::from_edges(3, &[(2, 2)]), Err(Error::Loop(2)));
        assert_eq!(Graph::from_edges(3, &[(1, 4)]), Err(Error::LabelOutOfRange { label: 4, n: 3 }));
        assert_eq!(Graph::from_edges(0, &[]), Err(Error::VertexCount(0)));
        assert_eq!(Graph::from_edges(63, &[]), Err(Error::VertexCount(63)));
    }

    #[test]
    fn components() {
        assert_eq!(Graph::path(3).connected_components(), vec![set(&[1, 2, 3])]);
        let d = diamond();
        assert_eq!(d.components_within(set(&[1, 4])), vec![set(&[1]), set(&[4])]);
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(g.connected_components(), vec![set(&[1, 2]), set(&[3])]);
    }

    #[test]
    fn restrictions() {
        let r = Graph::path(3).restriction(set(&[2]));
        assert_eq!(r.graph.edge_count(), 0);
        assert_eq!(r.labels, vec![0, 2]);
        let r = Graph::complete(3).restriction(set(&[1]));
        assert_eq!(r.graph, Graph::path(2));
        assert_eq!(r.labels, vec![1, 2]);
        let r = diamond().restriction(set(&[2, 3]));
        assert_eq!(r.graph.connected_components().len(), 2);
        let all = Graph::path(3).restriction(set(&[1, 2, 3]));
        assert_eq!(all.graph.n(), 0);
    }

    #[test]
    fn toggling() {
        let p3 = Graph::path(3);
        let cut = p3.toggle_edge(1, 2, EdgeEdit::Delete).unwrap();
        assert_eq!(cut.edges(), vec![(0, 1)]);
        assert_eq!(p3.toggle_edge(0, 2, EdgeEdit::Add).unwrap(), Graph::complete(3));
        let k3 = Graph::complete(3).toggle_edge(0, 1, EdgeEdit::Delete).unwrap();
        assert_eq!(k3.edges(), vec![(0, 2), (1, 2)]);
        assert_eq!(p3.toggle_edge(0, 1, EdgeEdit::Add), Err(Error::EdgePresent(1, 2)));
        assert_eq!(p3.toggle_edge(0, 2, EdgeEdit::Delete), Err(Error::EdgeMissing(1, 3)));
    }

    #[test]
    fn stats() {
        let s = Graph::complete(3).vertex_stats(0);
        assert_eq!((s.degree, s.alpha, s.simplicial, s.cut_vertex), (2, 0, true, false));
        let s = Graph::star(3).vertex_stats(0);
        assert_eq!((s.degree, s.alpha, s.simplicial, s.cut_vertex), (3, 3, false, true));
        assert_eq!(diamond().alpha(1), 1);
        assert!(!Graph::path(3).is_cut_vertex(0));
    }

    #[test]
    fn alpha_minimum() {
        assert_eq!(triangle_pendant().alpha_min(set(&[1, 2, 3])), Ok(0));
        assert_eq!(Graph::star(3).alpha_min(set(&[2])), Ok(0));
        assert_eq!(diamond().alpha_min(set(&[1])), Ok(0));
        assert!(diamond().alpha_min(set(&[1, 2, 3, 4])).is_err());
    }

    #[test]
    fn completions() {
        assert_eq!(Graph::star(3).ohtani_completion(0), Graph::complete(4));
        assert_eq!(Graph::complete(3).ohtani_completion(1), Graph::complete(3));
        assert_eq!(Graph::path(3).ohtani_completion(1), Graph::complete(3));

        let h = Graph::from_edges(3, &[(2, 3)]).unwrap();
        assert_eq!(h.edge_completion(0, 1), h);
        // Neighborhoods are taken in H itself, so an edge e brings its own endpoints along.
        let p4e = Graph::path(4).edge_completion(1, 2);
        assert_eq!(p4e, Graph::path(4).with_edge(0, 2).with_edge(1, 3));
        let p4 = Graph::path(4).without_edge(1, 2);
        assert_eq!(p4.edge_completion(1, 2), p4);
        let star = Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        let he = star.edge_completion(0, 1);
        assert!(he.is_clique(set(&[1, 3, 4])));
    }

    #[test]
    fn paths() {
        let p = Graph::complete(3).simple_paths(0, 2, true);
        assert_eq!(p.iter().map(|p| p.vertices.clone()).collect::<Vec<_>>(), vec![vec![0, 1, 2]]);
        let p = Graph::path(3).simple_paths(0, 2, false);
        assert_eq!(p[0].vertices, vec![0, 1, 2]);
        let p = diamond().simple_paths(1, 2, true);
        let got: Vec<_> = p.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(got, vec![vec![1, 0, 2], vec![1, 3, 2]]);
    }

    #[test]
    fn decomposability() {
        let d = triangle_pendant().is_decomposable().unwrap().unwrap();
        assert_eq!(d.vertex, 2);
        assert_eq!(d.parts[0].graph, Graph::complete(3));
        assert_eq!(d.parts[1].graph, Graph::path(2));
        assert!(Graph::star(3).is_decomposable().unwrap().is_none());
        let p4 = Graph::path(4).is_decomposable().unwrap().unwrap();
        assert_eq!(p4.vertex, 1);
        assert_eq!(Graph::from_edges(3, &[(1, 2)]).unwrap().is_decomposable().unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn full_decomposition() {
        let pieces = Graph::path(5).decompose_fully().unwrap();
        assert_eq!(pieces.len(), 4);
        assert!(pieces.iter().all(|p| p.graph == Graph::path(2)));
        let twp = Graph::from_edges(6, &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        let pieces = twp.decompose_fully().unwrap();
        let mut sizes: Vec<_> = pieces.iter().map(|p| p.graph.n()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 3]);
        assert_eq!(Graph::complete(3).decompose_fully().unwrap().len(), 1);
    }

    #[test]
    fn bipartite() {
        assert!(Graph::path(5).is_bipartite());
        assert!(!Graph::complete(3).is_bipartite());
        assert!(!diamond().is_bipartite());
        assert!(Graph::cycle(4).is_bipartite());
    }
}
