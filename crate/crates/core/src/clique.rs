//! Maximal cliques, the clique complex, chordality and leaf orders.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A simplicial complex given by its facets (bitmasks over `vertex_count` vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertex_count: usize,
    pub facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Keeps only the inclusion-maximal sets, sorted by [`facet_order`].
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = u64>) -> Self {
        let mut faces: Vec<u64> = faces.into_iter().collect();
        faces.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
        faces.dedup();
        let mut facets: Vec<u64> = Vec::new();
        for f in faces {
            if !facets.iter().any(|&g| f & !g == 0) {
                facets.push(f);
            }
        }
        facets.sort_by(|a, b| facet_order(*a, *b));
        SimplicialComplex { vertex_count, facets }
    }

    /// `(max facet size) - 1`; the void complex and `{∅}` both report -1.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.count_ones() as isize).max().unwrap_or(0) - 1
    }

    /// Facets as sorted 1-based vertex lists.
    pub fn facet_labels(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| VertexSet(f).labels()).collect()
    }
}

/// Lexicographic order of the sorted vertex lists.
pub fn facet_order(a: u64, b: u64) -> std::cmp::Ordering {
    VertexSet(a).iter().cmp(VertexSet(b).iter())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueSummary {
    pub maximal_cliques: Vec<VertexSet>,
    pub count: usize,
    pub dim: isize,
    pub omega: usize,
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = VertexSet(p | x).iter().max_by_key(|&u| (g.neighbors(u).0 & p).count_ones()).unwrap();
    for v in VertexSet(p & !g.neighbors(pivot).0).iter() {
        let nv = g.neighbors(v).0;
        bron_kerbosch(g, r | 1 << v, p & nv, x & nv, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

pub fn maximal_cliques(g: &Graph) -> CliqueSummary {
    let mut raw = Vec::new();
    bron_kerbosch(g, 0, g.vertices().0, 0, &mut raw);
    raw.sort_by(|a, b| facet_order(*a, *b));
    let omega = raw.iter().map(|c| c.count_ones() as usize).max().unwrap_or(0);
    CliqueSummary {
        count: raw.len(),
        dim: omega as isize - 1,
        omega,
        maximal_cliques: raw.into_iter().map(VertexSet).collect(),
    }
}

pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex { vertex_count: g.n(), facets: maximal_cliques(g).maximal_cliques.iter().map(|c| c.0).collect() }
}

/// Maximum cardinality search order (visit order, first visited first).
fn max_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g.vertices().difference(visited).iter().max_by_key(|&u| (weight[u], std::cmp::Reverse(u))).unwrap();
        visited = visited.with(v);
        order.push(v);
        for u in g.neighbors(v).difference(visited).iter() {
            weight[u] += 1;
        }
    }
    order
}

/// Checks that each vertex's neighbors later in `order` form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.vertices();
    for &v in order {
        later = later.without(v);
        if !g.is_clique(g.neighbors(v).intersection(later)) {
            return false;
        }
    }
    true
}

/// A perfect elimination order when `g` is chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let mut order = max_cardinality_search(g);
    order.reverse();
    is_perfect_elimination_order(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// A facet `g` of `facets` (other than `f`) with `f' ∩ f ⊆ g ∩ f` for every other facet `f'`.
pub fn branch_of(facets: &[u64], f: u64) -> Option<u64> {
    facets
        .iter()
        .copied()
        .filter(|&g| g != f)
        .find(|&g| facets.iter().filter(|&&h| h != f).all(|&h| h & f & !(g & f) == 0))
}

/// Orders the facets of Δ(G) so that each facet after the first is a leaf of
/// the complex generated by itself and its predecessors; `None` when no such
/// order exists. Leaves are peeled greedily from the end, taking the last
/// leaf in canonical facet order.
pub fn dirac_leaf_order(g: &Graph) -> Result<Option<Vec<u64>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut remaining = clique_complex(g).facets;
    let mut reversed = Vec::with_capacity(remaining.len());
    while remaining.len() > 1 {
        let leaf = remaining.iter().rposition(|&f| branch_of(&remaining, f).is_some());
        match leaf {
            Some(k) => reversed.push(remaining.remove(k)),
            None => return Ok(None),
        }
    }
    reversed.extend(remaining);
    reversed.reverse();
    Ok(Some(reversed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Codim1Conditions {
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub holds: bool,
}

/// The three clique conditions characterizing `c(G) = n - 2` for connected chordal graphs.
pub fn codim1_conditions(g: &Graph) -> Result<Codim1Conditions> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    let cliques = maximal_cliques(g).maximal_cliques;
    let cond_i = cliques.iter().all(|c| c.len() <= 3);
    let triangles: Vec<u64> = cliques.iter().filter(|c| c.len() == 3).map(|c| c.0).collect();
    let cond_ii = !triangles.is_empty();
    // Triangles sharing an edge are adjacent; condition (iii) is connectivity.
    let t = triangles.len();
    let cond_iii = if t <= 1 {
        t == 1
    } else {
        let mut reached = vec![false; t];
        reached[0] = true;
        let mut stack = vec![0];
        while let Some(a) = stack.pop() {
            for b in 0..t {
                if !reached[b] && (triangles[a] & triangles[b]).count_ones() == 2 {
                    reached[b] = true;
                    stack.push(b);
                }
            }
        }
        reached.iter().all(|&r| r)
    };
    Ok(Codim1Conditions { cond_i, cond_ii, cond_iii, holds: cond_i && cond_ii && cond_iii })
}
