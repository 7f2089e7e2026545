//! The squarefree lex initial ideal of `J_G`, Stanley–Reisner complexes and
//! graded Betti tables by Hochster's formula.
//!
//! The monomial order is lex with `x_1 > ... > x_n > y_1 > ... > y_n`. For
//! this order the reduced Gröbner basis of `J_G` is `{u_π f_ij}` over the
//! admissible paths `π` from `i` to `j` (`i < j`): induced paths whose inner
//! vertices all lie outside `[i, j]`, with `u_π` the product of `x_k` over
//! inner `k > j` and `y_k` over inner `k < i`. Its lead terms `u_π x_i y_j`
//! are squarefree, so the initial ideal carries the regularity and depth of
//! `S/J_G`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::clique::SimplicialComplex;
use crate::error::{tier, Error, Result};
use crate::graph::{Graph, VertexPath, VertexSet};
use crate::homology::{self, homology_of_faces};
use crate::monomial::{Monomial2n, SquarefreeMonomialIdeal};

/// Largest slot count for Hochster scans (`2n <= 16`).
pub const MAX_BETTI_SLOTS: usize = 16;
/// Largest slot count for explicit Stanley–Reisner facet lists.
pub const MAX_SR_SLOTS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePath {
    pub path: VertexPath,
    pub u_pi: Monomial2n,
    pub lead: Monomial2n,
}

fn admissible_dfs(
    g: &Graph,
    j: usize,
    allowed: VertexSet,
    stack: &mut Vec<usize>,
    on_path: VertexSet,
    out: &mut Vec<VertexPath>,
) {
    let last = *stack.last().unwrap();
    let earlier = on_path.without(last);
    if g.has_edge(last, j) {
        // Any longer route would leave a chord from `last` to `j`.
        if g.neighbors(j).intersection(earlier).is_empty() {
            stack.push(j);
            out.push(VertexPath { vertices: stack.clone() });
            stack.pop();
        }
        return;
    }
    for w in g.neighbors(last).intersection(allowed).difference(on_path).iter() {
        if !g.neighbors(w).intersection(earlier).is_empty() {
            continue;
        }
        stack.push(w);
        admissible_dfs(g, j, allowed, stack, on_path.with(w), out);
        stack.pop();
    }
}

/// All admissible paths, grouped by endpoint pair `(i, j)` in lexicographic order.
pub fn admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let n = g.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // Inner vertices must avoid the closed interval [i, j].
            let inside = VertexSet::full(j + 1).difference(VertexSet::full(i));
            let allowed = g.vertices().difference(inside);
            let mut paths = Vec::new();
            admissible_dfs(g, j, allowed, &mut vec![i], VertexSet::singleton(i), &mut paths);
            paths.sort();
            for path in paths {
                let u_pi = path
                    .inner()
                    .iter()
                    .fold(Monomial2n::ONE, |m, &k| m.times(if k > j { Monomial2n::x(k) } else { Monomial2n::y(n, k) }));
                let lead = u_pi.times(Monomial2n::x(i)).times(Monomial2n::y(n, j));
                out.push(AdmissiblePath { path, u_pi, lead });
            }
        }
    }
    out
}

/// Minimal generators of `in(J_G)` on `2n` slots.
pub fn initial_ideal(g: &Graph) -> SquarefreeMonomialIdeal {
    SquarefreeMonomialIdeal::new(2 * g.n(), admissible_paths(g).into_iter().map(|p| p.lead))
}

/// The monomial ideal `I_{H,e}` for `e = {i, j}`: for every `i`–`j` path with
/// inner vertices `i_1..i_s` (`s >= 1`) and every `0 <= t <= s`, the monomial
/// `y_{i_1}..y_{i_t} x_{i_{t+1}}..x_{i_s}`. The bare edge (`s = 0`) is excluded.
pub fn colon_generators(h: &Graph, i: usize, j: usize) -> SquarefreeMonomialIdeal {
    let n = h.n();
    let mut gens = Vec::new();
    for path in h.simple_paths(i, j, true) {
        let inner = path.inner();
        for t in 0..=inner.len() {
            let m = inner.iter().enumerate().fold(Monomial2n::ONE, |m, (k, &v)| {
                m.times(if k < t { Monomial2n::y(n, v) } else { Monomial2n::x(v) })
            });
            gens.push(m);
        }
    }
    SquarefreeMonomialIdeal::new(2 * n, gens)
}

fn sr_dfs(n_vars: usize, gens: &[u64], slot: usize, face: u64, out: &mut Vec<u64>) {
    if slot == n_vars {
        let maximal =
            (0..n_vars).filter(|&s| face >> s & 1 == 0).all(|s| gens.iter().any(|&g| g & !(face | 1 << s) == 0));
        if maximal {
            out.push(face);
        }
        return;
    }
    let with = face | 1 << slot;
    if !gens.iter().any(|&g| g & !with == 0) {
        sr_dfs(n_vars, gens, slot + 1, with, out);
    }
    sr_dfs(n_vars, gens, slot + 1, face, out);
}

/// The Stanley–Reisner complex of a proper squarefree monomial ideal, as facets over the slots.
pub fn stanley_reisner(ideal: &SquarefreeMonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::Precondition("the unit ideal has no Stanley–Reisner complex".into()));
    }
    tier("Stanley–Reisner slot count", ideal.n_vars, MAX_SR_SLOTS)?;
    let gens: Vec<u64> = ideal.gens().iter().map(|g| g.0 as u64).collect();
    let mut facets = Vec::new();
    sr_dfs(ideal.n_vars, &gens, 0, 0, &mut facets);
    Ok(SimplicialComplex::from_faces(ideal.n_vars, facets))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub rank: usize,
}

/// Graded Betti numbers `β_{i,j}` of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, usize), usize>,
    pub reg: usize,
    pub pd: usize,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn triples(&self) -> Vec<BettiEntry> {
        self.entries.iter().map(|(&(i, j), &rank)| BettiEntry { i, j, rank }).collect()
    }

    fn from_entries(entries: BTreeMap<(usize, usize), usize>) -> Self {
        let reg = entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        let pd = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        BettiTable { entries, reg, pd }
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let triples = self.triples();
        let mut seq = s.serialize_seq(Some(triples.len()))?;
        for t in &triples {
            seq.serialize_element(t)?;
        }
        seq.end()
    }
}

struct HochsterScan {
    n_vars: usize,
    gens: Vec<u32>,
}

impl HochsterScan {
    /// Faces of the subcomplex induced on `w`, grouped by size.
    fn faces_within(&self, w: u32) -> Vec<Vec<u32>> {
        let slots: Vec<u32> = (0..self.n_vars as u32).filter(|s| w >> s & 1 == 1).collect();
        let local: Vec<u32> = self.gens.iter().copied().filter(|&g| g & !w == 0).collect();
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); slots.len() + 1];
        let mut stack: Vec<(u32, usize)> = vec![(0, 0)];
        while let Some((face, start)) = stack.pop() {
            by_size[face.count_ones() as usize].push(face);
            for (k, &s) in slots.iter().enumerate().skip(start) {
                let next = face | 1 << s;
                if local.iter().all(|&g| g & !next != 0) {
                    stack.push((next, k + 1));
                }
            }
        }
        while by_size.last().is_some_and(Vec::is_empty) {
            by_size.pop();
        }
        by_size
    }

    /// Contributions `((i, |W|), rank)` of one slot subset `W`.
    fn scan(&self, w: u32, index: &mut [u32]) -> Vec<((usize, usize), usize)> {
        // If some slot of W lies in no generator inside W, the induced
        // subcomplex is a cone and has no reduced homology.
        let cover = self.gens.iter().filter(|&&g| g & !w == 0).fold(0, |acc, &g| acc | g);
        if cover != w {
            return Vec::new();
        }
        let by_size = self.faces_within(w);
        let ranks = homology_of_faces(&by_size, index);
        debug_assert_eq!(homology::alternating_sum(&ranks), homology::reduced_euler_characteristic(&by_size));
        let size = w.count_ones() as usize;
        ranks
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r > 0)
            .map(|(k, &r)| {
                // ranks[k] is H̃_{k-1}; Hochster: β_{i,W} = H̃_{|W|-i-1}(Δ_W).
                ((size - k, size), r)
            })
            .collect()
    }
}

/// Graded Betti table of `S/I` by scanning every slot subset.
pub fn betti_table(ideal: &SquarefreeMonomialIdeal) -> Result<BettiTable> {
    betti_table_with(ideal, false)
}

/// As [`betti_table`]; `parallel` splits the subset scan across the rayon pool.
/// The result does not depend on the split.
pub fn betti_table_with(ideal: &SquarefreeMonomialIdeal, parallel: bool) -> Result<BettiTable> {
    tier("Betti table slot count", ideal.n_vars, MAX_BETTI_SLOTS)?;
    if ideal.is_unit() {
        return Err(Error::Precondition("S/I is zero for the unit ideal".into()));
    }
    let scan = HochsterScan { n_vars: ideal.n_vars, gens: ideal.gens().iter().map(|g| g.0 as u32).collect() };
    let total = 1u32 << ideal.n_vars;
    let buf = || vec![0u32; total as usize];
    let parts: Vec<((usize, usize), usize)> = if parallel {
        (0..total).into_par_iter().map_init(buf, |index, w| scan.scan(w, index)).flatten_iter().collect()
    } else {
        let mut index = buf();
        (0..total).flat_map(|w| scan.scan(w, &mut index)).collect()
    };
    let mut entries = BTreeMap::new();
    for (key, r) in parts {
        *entries.entry(key).or_insert(0) += r;
    }
    Ok(BettiTable::from_entries(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lead_strings(g: &Graph) -> Vec<String> {
        let mut v = initial_ideal(g).render();
        v.sort();
        v
    }

    #[test]
    fn path_leads() {
        assert_eq!(lead_strings(&Graph::path(3)), vec!["x1y2", "x2y3"]);
        assert!(admissible_paths(&Graph::path(3)).iter().all(|p| p.path.vertices.len() == 2));
    }

    #[test]
    fn relabeled_path_leads() {
        let g = Graph::from_edges(3, &[(1, 2), (1, 3)]).unwrap();
        let paths = admissible_paths(&g);
        let long: Vec<_> = paths.iter().filter(|p| p.path.vertices.len() == 3).collect();
        assert_eq!(long.len(), 1);
        assert_eq!(long[0].path.vertices, vec![1, 0, 2]);
        assert_eq!(long[0].u_pi.render(3), "y1");
        assert_eq!(lead_strings(&g), vec!["x1y2", "x1y3", "x2y1y3"]);
    }

    #[test]
    fn complete_leads() {
        assert_eq!(lead_strings(&Graph::complete(3)), vec!["x1y2", "x1y3", "x2y3"]);
        assert!(initial_ideal(&Graph::empty(3)).is_zero());
    }

    #[test]
    fn colon_examples() {
        let i = colon_generators(&Graph::complete(3), 0, 2);
        assert_eq!(i.render(), vec!["x2", "y2"]);
        let mut got = colon_generators(&Graph::path(4), 0, 3).render();
        got.sort();
        assert_eq!(got, vec!["x2x3", "x3y2", "y2y3"]);
        assert!(colon_generators(&Graph::path(3), 0, 1).is_zero());
    }

    #[test]
    fn simplicial_vertex_colon() {
        // v = 0 simplicial with neighbors {1, 2, 3} forming a clique; e = {0, 3}.
        let g = Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        let i = colon_generators(&g, 0, 3);
        let mut got = i.render();
        got.sort();
        assert_eq!(got, vec!["x2", "x3", "y2", "y3"]);
    }

    #[test]
    fn stanley_reisner_examples() {
        let n = 2;
        let x1y2 = Monomial2n::x(0).times(Monomial2n::y(n, 1));
        let c = stanley_reisner(&SquarefreeMonomialIdeal::new(4, [x1y2])).unwrap();
        // slots: x1=0, x2=1, y1=2, y2=3
        assert_eq!(c.facets, vec![0b0111, 0b1110]);
        let z = stanley_reisner(&SquarefreeMonomialIdeal::zero(4)).unwrap();
        assert_eq!(z.facets, vec![0b1111]);
        let cone = stanley_reisner(&SquarefreeMonomialIdeal::new(4, [Monomial2n::x(0), Monomial2n::y(n, 0)])).unwrap();
        assert_eq!(cone.facets, vec![0b1010]);
        assert!(stanley_reisner(&SquarefreeMonomialIdeal::new(4, [Monomial2n::ONE])).is_err());
    }

    #[test]
    fn betti_of_path3() {
        let t = betti_table(&initial_ideal(&Graph::path(3))).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.entries.len(), 3);
        assert_eq!((t.reg, t.pd), (2, 2));
    }

    #[test]
    fn betti_of_zero_and_triangle() {
        let t = betti_table(&SquarefreeMonomialIdeal::zero(6)).unwrap();
        assert_eq!((t.reg, t.pd, t.entries.len()), (0, 0, 1));
        let t = betti_table(&initial_ideal(&Graph::complete(3))).unwrap();
        assert_eq!((t.reg, t.pd), (1, 2));
        assert_eq!((t.get(1, 2), t.get(2, 3)), (3, 2));
    }

    #[test]
    fn parallel_scan_matches() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 4)]).unwrap();
        let i = initial_ideal(&g);
        assert_eq!(betti_table_with(&i, false).unwrap(), betti_table_with(&i, true).unwrap());
    }

    #[test]
    fn serialized_as_triples() {
        let t = betti_table(&initial_ideal(&Graph::path(2))).unwrap();
        let json = serde_json_like(&t);
        assert_eq!(json, vec![(0, 0, 1), (1, 2, 1)]);
    }

    fn serde_json_like(t: &BettiTable) -> Vec<(usize, usize, usize)> {
        t.triples().iter().map(|e| (e.i, e.j, e.rank)).collect()
    }
}
