//! Licci verdicts for `J_G`: by the shape of `G`, by regularity and
//! Cohen–Macaulayness, and by the unmixed criterion for chordal graphs.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::clique::is_chordal;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::invariants::{invariants_with, InvariantOptions, InvariantRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Path,
    /// Pendant path lengths at the three triangle vertices, non-increasing.
    TriangleWithPaths {
        r: usize,
        s: usize,
        t: usize,
    },
    Other,
}

impl Shape {
    pub fn kind(&self) -> &'static str {
        match self {
            Shape::Path => "Path",
            Shape::TriangleWithPaths { .. } => "TriangleWithPaths",
            Shape::Other => "Other",
        }
    }
}

impl Serialize for Shape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (r, s_, t) = match *self {
            Shape::TriangleWithPaths { r, s, t } => (Some(r), Some(s), Some(t)),
            _ => (None, None, None),
        };
        let mut st = s.serialize_struct("Shape", 4)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("r", &r)?;
        st.serialize_field("s", &s_)?;
        st.serialize_field("t", &t)?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Shape,
    Algebra,
    Chordal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LicciVerdict {
    pub licci: bool,
    pub route: Route,
    pub witness: Option<InvariantRecord>,
    /// The shape of a connected graph.
    pub shape: Option<Shape>,
    /// Shapes of all components, isolated vertices included (as paths).
    pub component_shapes: Vec<Shape>,
    pub isolated_vertices: usize,
}

/// Shape of a connected graph.
pub fn classify_shape(g: &Graph) -> Result<Shape> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_path_graph() {
        return Ok(Shape::Path);
    }
    let n = g.n();
    if g.edge_count() != n {
        return Ok(Shape::Other);
    }
    // Strip leaves until only the unique cycle is left.
    let mut core = g.vertices();
    loop {
        let leaf = core.iter().find(|&v| g.neighbors(v).intersection(core).len() <= 1);
        match leaf {
            Some(v) => core = core.without(v),
            None => break,
        }
    }
    if core.len() != 3 {
        return Ok(Shape::Other);
    }
    let rest = g.vertices().difference(core);
    if core.iter().any(|v| g.degree(v) > 3) || rest.iter().any(|v| g.degree(v) > 2) {
        return Ok(Shape::Other);
    }
    let mut lengths: Vec<usize> = core
        .iter()
        .map(|v| {
            let tails = g.components_within(rest);
            tails.iter().find(|c| !g.neighbors(v).intersection(**c).is_empty()).map_or(0, |c| c.len())
        })
        .collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Shape::TriangleWithPaths { r: lengths[0], s: lengths[1], t: lengths[2] })
}

fn component_shapes(g: &Graph) -> Result<(Vec<Shape>, usize)> {
    let comps = g.connected_components();
    let isolated = comps.iter().filter(|c| c.len() == 1).count();
    let shapes = comps.iter().map(|&c| classify_shape(&g.induced(c).graph)).collect::<Result<Vec<_>>>()?;
    Ok((shapes, isolated))
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(())
}

pub fn licci_by_shape(g: &Graph) -> Result<LicciVerdict> {
    require_edges(g)?;
    let (shapes, isolated) = component_shapes(g)?;
    let triangles = shapes.iter().filter(|s| matches!(s, Shape::TriangleWithPaths { .. })).count();
    let others = shapes.iter().filter(|s| **s == Shape::Other).count();
    let licci = others == 0 && triangles <= 1;
    Ok(LicciVerdict {
        licci,
        route: Route::Shape,
        witness: None,
        shape: (shapes.len() == 1).then(|| shapes[0]),
        component_shapes: shapes,
        isolated_vertices: isolated,
    })
}

/// `cm ∧ reg ≥ n − c − 1`, where `c` counts all components including isolated vertices.
pub fn licci_by_algebra(g: &Graph) -> Result<LicciVerdict> {
    licci_by_algebra_with(g, InvariantOptions::default())
}

pub fn licci_by_algebra_with(g: &Graph, opts: InvariantOptions) -> Result<LicciVerdict> {
    require_edges(g)?;
    licci_by_algebra_from(g, invariants_with(g, opts)?)
}

/// The algebra route on invariants already computed for `g`.
pub fn licci_by_algebra_from(g: &Graph, inv: InvariantRecord) -> Result<LicciVerdict> {
    require_edges(g)?;
    let c = g.connected_components().len();
    let licci = inv.cm && inv.reg + c + 1 >= g.n();
    algebra_verdict(g, inv, licci, Route::Algebra)
}

fn algebra_verdict(g: &Graph, inv: InvariantRecord, licci: bool, route: Route) -> Result<LicciVerdict> {
    let (shapes, isolated) = component_shapes(g)?;
    Ok(LicciVerdict {
        licci,
        route,
        witness: Some(inv),
        shape: (shapes.len() == 1).then(|| shapes[0]),
        component_shapes: shapes,
        isolated_vertices: isolated,
    })
}

/// For connected chordal graphs: `unmixed ∧ reg ≥ n − 2`.
pub fn chordal_licci(g: &Graph) -> Result<LicciVerdict> {
    chordal_licci_with(g, InvariantOptions::default())
}

pub fn chordal_licci_with(g: &Graph, opts: InvariantOptions) -> Result<LicciVerdict> {
    require_chordal(g)?;
    chordal_licci_from(g, invariants_with(g, opts)?)
}

fn require_chordal(g: &Graph) -> Result<()> {
    require_edges(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    Ok(())
}

/// The chordal route on invariants already computed for `g`.
pub fn chordal_licci_from(g: &Graph, inv: InvariantRecord) -> Result<LicciVerdict> {
    require_chordal(g)?;
    let licci = inv.unmixed && inv.reg + 2 >= g.n();
    algebra_verdict(g, inv, licci, Route::Chordal)
}

/// `reg ≥ (height − 1)(indeg − 1)` with `indeg = 2`.
pub fn hu_bound_holds(g: &Graph) -> Result<bool> {
    require_edges(g)?;
    let inv = invariants_with(g, InvariantOptions::default())?;
    Ok(hu_bound(&inv))
}

pub fn hu_bound(inv: &InvariantRecord) -> bool {
    let indeg = inv.indeg.unwrap_or(0) as isize;
    inv.reg as isize >= (inv.height as isize - 1) * (indeg - 1)
}

/// For connected bipartite graphs the shape verdict, checked against "is a path".
pub fn bipartite_corollary(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let v = licci_by_shape(g)?;
    if v.licci != g.is_path_graph() {
        return Err(Error::RouteDisagreement(format!(
            "bipartite graph {} judged licci={} but path={}",
            graph6::encode_string(g),
            v.licci,
            g.is_path_graph()
        )));
    }
    Ok(v.licci)
}

/// Combined verdict from every applicable route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub licci: bool,
    pub shape: Option<Shape>,
    pub reg: usize,
    pub depth: usize,
    pub dim: usize,
    pub cm: bool,
    pub unmixed: bool,
    pub routes_agree: bool,
}

/// Runs the shape and algebra routes (and the chordal route for connected
/// chordal graphs); disagreement is an error.
pub fn classify(g: &Graph, opts: InvariantOptions) -> Result<Verdict> {
    require_edges(g)?;
    classify_from(g, invariants_with(g, opts)?)
}

/// As [`classify`], reusing invariants already computed for `g`.
pub fn classify_from(g: &Graph, inv: InvariantRecord) -> Result<Verdict> {
    let by_shape = licci_by_shape(g)?;
    let by_algebra = licci_by_algebra_from(g, inv)?;
    let mut agree = by_shape.licci == by_algebra.licci;
    if g.is_connected() && is_chordal(g) {
        agree &= chordal_licci_from(g, inv)?.licci == by_shape.licci;
    }
    if !agree {
        return Err(Error::RouteDisagreement(graph6::encode_string(g)));
    }
    Ok(Verdict {
        licci: by_shape.licci,
        shape: by_shape.shape,
        reg: inv.reg,
        depth: inv.depth,
        dim: inv.dim,
        cm: inv.cm,
        unmixed: inv.unmixed,
        routes_agree: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn twp(r: usize, s: usize, t: usize) -> Graph {
        let mut edges = vec![(1, 2), (1, 3), (2, 3)];
        let mut next = 4;
        for (root, len) in [(1, r), (2, s), (3, t)] {
            let mut prev = root;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        g(next - 1, &edges)
    }

    #[test]
    fn shapes() {
        assert_eq!(classify_shape(&Graph::path(7)).unwrap(), Shape::Path);
        assert_eq!(classify_shape(&twp(1, 2, 0)).unwrap(), Shape::TriangleWithPaths { r: 2, s: 1, t: 0 });
        let bad = g(5, &[(1, 2), (1, 3), (2, 3), (1, 4), (1, 5)]);
        assert_eq!(classify_shape(&bad).unwrap(), Shape::Other);
        assert_eq!(classify_shape(&Graph::cycle(4)).unwrap(), Shape::Other);
        assert_eq!(classify_shape(&g(3, &[(1, 2)])), Err(Error::Disconnected));
    }

    #[test]
    fn shape_route() {
        let k3p2 = g(5, &[(1, 2), (1, 3), (2, 3), (4, 5)]);
        assert!(licci_by_shape(&k3p2).unwrap().licci);
        let k3k3 = g(6, &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]);
        assert!(!licci_by_shape(&k3k3).unwrap().licci);
        assert!(!licci_by_shape(&Graph::cycle(4)).unwrap().licci);
        assert_eq!(licci_by_shape(&Graph::empty(2)), Err(Error::Edgeless));
        let v = licci_by_shape(&g(4, &[(1, 2)])).unwrap();
        assert_eq!((v.isolated_vertices, v.licci, v.shape), (2, true, None));
    }

    #[test]
    fn algebra_route() {
        let p4 = licci_by_algebra(&Graph::path(4)).unwrap();
        assert!(p4.licci);
        assert_eq!(p4.witness.unwrap().reg, 3);
        let tp = licci_by_algebra(&twp(1, 0, 0)).unwrap();
        assert_eq!((tp.licci, tp.witness.unwrap().reg), (true, 2));
        let diamond = g(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
        let d = licci_by_algebra(&diamond).unwrap();
        assert!(!d.licci && !d.witness.unwrap().unmixed);
    }

    #[test]
    fn chordal_route() {
        let t = chordal_licci(&twp(1, 1, 1)).unwrap();
        assert_eq!((t.licci, t.witness.unwrap().reg), (true, 4));
        assert!(!chordal_licci(&Graph::star(3)).unwrap().licci);
        assert!(chordal_licci(&Graph::path(6)).unwrap().licci);
        assert_eq!(chordal_licci(&Graph::cycle(4)), Err(Error::NotChordal));
    }

    #[test]
    fn hu_bound_examples() {
        assert!(hu_bound_holds(&Graph::path(5)).unwrap());
        assert!(!hu_bound_holds(&Graph::complete(4)).unwrap());
        assert!(hu_bound_holds(&Graph::complete(3)).unwrap());
    }

    #[test]
    fn bipartite() {
        assert!(bipartite_corollary(&Graph::path(5)).unwrap());
        assert!(!bipartite_corollary(&Graph::cycle(4)).unwrap());
        assert!(!bipartite_corollary(&Graph::star(3)).unwrap());
        assert_eq!(bipartite_corollary(&Graph::complete(3)), Err(Error::NotBipartite));
    }

    #[test]
    fn combined() {
        let v = classify(&twp(1, 1, 0), InvariantOptions::default()).unwrap();
        assert!(v.licci && v.routes_agree && v.cm);
        assert_eq!(v.reg, 3);
    }
}
