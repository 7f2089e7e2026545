//! One graph through the full pipeline.

use serde::Serialize;

use bei_core::canon::canonical_form;
use bei_core::classifier::{classify_from, classify_shape, Shape};
use bei_core::clique::{is_chordal, maximal_cliques};
use bei_core::graph6;
use bei_core::invariants::{invariants_with, InvariantOptions, InvariantRecord};
use bei_core::primes::{cut_sets, minimal_primes, PrimeRecord};
use bei_core::{Graph, Result};

use crate::report::Table;

/// One census line. Field order is the JSONL column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub graph6: String,
    pub n: usize,
    pub edge_count: usize,
    pub chordal: bool,
    pub dim_clique_complex: isize,
    pub c_cliques: usize,
    pub cut_set_count: usize,
    pub unmixed: bool,
    pub dim: usize,
    pub depth: usize,
    pub reg: usize,
    pub cm: bool,
    /// Only for connected graphs.
    pub shape: Option<Shape>,
    /// Undefined for edgeless graphs.
    pub licci: Option<bool>,
    pub routes_agree: bool,
}

pub fn census_record(g: &Graph, opts: InvariantOptions) -> Result<CensusRecord> {
    record_from(g, invariants_with(g, opts)?)
}

/// Builds the record from invariants already computed for `g`.
/// Route disagreement surfaces as an error.
pub fn record_from(g: &Graph, inv: InvariantRecord) -> Result<CensusRecord> {
    let cliques = maximal_cliques(g);
    let licci = if g.edge_count() == 0 { None } else { Some(classify_from(g, inv)?.licci) };
    let shape = if g.is_connected() { Some(classify_shape(g)?) } else { None };
    Ok(CensusRecord {
        graph6: String::from_utf8(canonical_form(g)?).expect("graph6 is ASCII"),
        n: g.n(),
        edge_count: g.edge_count(),
        chordal: is_chordal(g),
        dim_clique_complex: cliques.dim,
        c_cliques: cliques.count,
        cut_set_count: cut_sets(g).len(),
        unmixed: inv.unmixed,
        dim: inv.dim,
        depth: inv.depth,
        reg: inv.reg,
        cm: inv.cm,
        shape,
        licci,
        routes_agree: true,
    })
}

/// `bei analyze` output: the census record plus details in the input labeling.
#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub input: String,
    pub record: CensusRecord,
    pub pd: usize,
    pub height: usize,
    pub indeg: Option<usize>,
    pub maximal_cliques: Vec<Vec<usize>>,
    pub minimal_primes: Vec<PrimeRecord>,
}

pub fn analyze(g: &Graph, opts: InvariantOptions) -> Result<Analysis> {
    let inv = invariants_with(g, opts)?;
    Ok(Analysis {
        input: graph6::to_edge_list(g),
        record: record_from(g, inv)?,
        pd: inv.pd,
        height: inv.height,
        indeg: inv.indeg,
        maximal_cliques: maximal_cliques(g).maximal_cliques.iter().map(|c| c.labels()).collect(),
        minimal_primes: minimal_primes(g).primes.iter().map(PrimeRecord::from).collect(),
    })
}

fn shape_text(shape: Option<Shape>) -> String {
    match shape {
        None => "-".into(),
        Some(Shape::TriangleWithPaths { r, s, t }) => format!("TriangleWithPaths({r},{s},{t})"),
        Some(s) => s.kind().into(),
    }
}

fn sets_text(sets: impl IntoIterator<Item = Vec<usize>>) -> String {
    let parts: Vec<String> = sets
        .into_iter()
        .map(|s| format!("{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    parts.join(" ")
}

impl Analysis {
    pub fn to_text(&self) -> String {
        let r = &self.record;
        let opt = |v: Option<bool>| v.map_or("-".to_string(), |b| b.to_string());
        let mut t = Table::new(["field", "value"]);
        let rows: Vec<(&str, String)> = vec![
            ("input", self.input.clone()),
            ("graph6", r.graph6.clone()),
            ("n", r.n.to_string()),
            ("edges", r.edge_count.to_string()),
            ("chordal", r.chordal.to_string()),
            ("maximal cliques", sets_text(self.maximal_cliques.clone())),
            ("dim clique complex", r.dim_clique_complex.to_string()),
            ("cut sets", r.cut_set_count.to_string()),
            ("minimal primes", sets_text(self.minimal_primes.iter().map(|p| p.s.clone()))),
            ("height", self.height.to_string()),
            ("dim", r.dim.to_string()),
            ("depth", r.depth.to_string()),
            ("reg", r.reg.to_string()),
            ("pd", self.pd.to_string()),
            ("unmixed", r.unmixed.to_string()),
            ("cm", r.cm.to_string()),
            ("shape", shape_text(r.shape)),
            ("licci", opt(r.licci)),
            ("routes agree", r.routes_agree.to_string()),
        ];
        for (k, v) in rows {
            t.row([k.to_string(), v]);
        }
        t.render()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(g: &Graph) -> CensusRecord {
        census_record(g, InvariantOptions::default()).unwrap()
    }

    #[test]
    fn path_on_five() {
        let r = rec(&Graph::path(5));
        assert_eq!((r.reg, r.cm, r.shape, r.licci), (4, true, Some(Shape::Path), Some(true)));
        assert_eq!((r.dim, r.depth), (6, 6));
    }

    #[test]
    fn diamond() {
        let g = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let r = rec(&g);
        assert!(!r.unmixed);
        assert_eq!(r.licci, Some(false));
        assert_eq!((r.c_cliques, r.dim_clique_complex, r.cut_set_count), (2, 2, 2));
    }

    #[test]
    fn triangle_with_two_pendants() {
        let g = Graph::from_edges(5, &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 5)]).unwrap();
        let r = rec(&g);
        assert_eq!(r.reg, 3);
        assert_eq!(r.licci, Some(true));
        assert_eq!(r.shape, Some(Shape::TriangleWithPaths { r: 1, s: 1, t: 0 }));
    }

    #[test]
    fn labels_do_not_matter() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let h = Graph::from_edges(4, &[(3, 1), (1, 4), (4, 2)]).unwrap();
        assert_eq!(rec(&g), rec(&h));
    }

    #[test]
    fn edgeless_and_disconnected() {
        let r = rec(&Graph::empty(2));
        assert_eq!((r.licci, r.shape), (None, None));
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        let r = rec(&g);
        assert_eq!((r.licci, r.shape), (Some(true), None));
    }

    #[test]
    fn analysis_uses_input_labels() {
        let g = Graph::from_edges(3, &[(1, 3), (3, 2)]).unwrap();
        let a = analyze(&g, InvariantOptions::default()).unwrap();
        assert_eq!(a.input, "3;1-3,2-3");
        assert_eq!(a.maximal_cliques, vec![vec![1, 3], vec![2, 3]]);
        assert!(a.to_text().contains("licci"));
    }
}
