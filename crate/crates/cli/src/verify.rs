//! Exhaustive theorem scans over the corpus of small graphs.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use bei_core::canon::enumerate_connected;
use bei_core::classifier::{
    chordal_licci_from, classify_shape, hu_bound, licci_by_algebra_from, licci_by_shape, Shape,
};
use bei_core::clique::{codim1_conditions, is_chordal, maximal_cliques};
use bei_core::invariants::MAX_COMPONENT_N;
use bei_core::{Graph, Result};

use crate::campaign::{run_checks, Check};
use crate::corpus::{Corpus, Entry};
use crate::error::{HarnessError, HarnessResult};
use crate::report::Table;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub statement: String,
    /// Largest vertex count scanned.
    pub tier: usize,
    pub instances: usize,
    pub instances_per_n: BTreeMap<usize, usize>,
    pub violations: Vec<Violation>,
    /// Named counts per vertex count, e.g. licci classes.
    pub tallies: BTreeMap<String, BTreeMap<usize, usize>>,
    pub wall_time_s: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, name: &str, n: usize) -> usize {
        self.tallies.get(name).and_then(|t| t.get(&n)).copied().unwrap_or(0)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "theorem     {}\nstatement   {}\ntier        n <= {}\ninstances   {}\nviolations  {}\nwall time   {:.3}s\n",
            self.theorem,
            self.statement,
            self.tier,
            self.instances,
            self.violations.len(),
            self.wall_time_s
        );
        if !self.instances_per_n.is_empty() {
            let names: Vec<&String> = self.tallies.keys().collect();
            let mut header = vec!["n", "instances"];
            header.extend(names.iter().map(|s| s.as_str()));
            let mut t = Table::with_header(header.iter().map(|s| s.to_string()).collect());
            for (&n, &k) in &self.instances_per_n {
                let mut row = vec![n.to_string(), k.to_string()];
                row.extend(names.iter().map(|name| self.tally(name, n).to_string()));
                t.row(row);
            }
            out.push('\n');
            out.push_str(&t.render());
        }
        if !self.violations.is_empty() {
            let mut t = Table::new(["graph6", "detail"]);
            for v in &self.violations {
                t.row([v.graph6.clone(), v.detail.clone()]);
            }
            out.push('\n');
            out.push_str(&t.render());
        }
        out
    }
}

#[derive(Default)]
pub struct Scan {
    instances_per_n: BTreeMap<usize, usize>,
    violations: Vec<Violation>,
    tallies: BTreeMap<String, BTreeMap<usize, usize>>,
}

impl Scan {
    fn check(&mut self, graph6: &str, n: usize, ok: bool, detail: impl FnOnce() -> String) {
        *self.instances_per_n.entry(n).or_default() += 1;
        if !ok {
            self.violations.push(Violation { graph6: graph6.to_string(), detail: detail() });
        }
    }

    fn entry(&mut self, e: &Entry, ok: bool, detail: impl FnOnce() -> String) {
        self.check(&e.graph6, e.graph.n(), ok, detail);
    }

    fn tally(&mut self, name: &str, n: usize) {
        *self.tallies.entry(name.to_string()).or_default().entry(n).or_default() += 1;
    }
}

type ScanFn = fn(&Corpus, usize, &mut Scan) -> Result<()>;

#[derive(Clone, Copy)]
enum Kind {
    Census(ScanFn),
    Oracle(Check),
}

#[derive(Clone, Copy)]
pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    pub max_n: usize,
    kind: Kind,
}

const fn census(id: &'static str, statement: &'static str, f: ScanFn) -> Theorem {
    Theorem { id, statement, max_n: MAX_COMPONENT_N, kind: Kind::Census(f) }
}

const fn oracle(id: &'static str, statement: &'static str, check: Check, max_n: usize) -> Theorem {
    Theorem { id, statement, max_n, kind: Kind::Oracle(check) }
}

pub const THEOREMS: &[Theorem] = &[
    census("naoki-bound", "connected G: reg <= n - dim of the clique complex", naoki_bound),
    census("regularity-maximum", "connected G: reg = n - 1 iff G is a path", regularity_maximum),
    census("licci-equivalence", "connected G: shape route and algebra route agree", licci_equivalence),
    census("hu-bound", "licci connected G: reg >= (height - 1)(indeg - 1)", hu_bound_scan),
    census("chordal-licci", "connected chordal G: unmixed and reg >= n - 2 iff licci shape; reg <= c(G)", chordal),
    census("codim1-cliques", "connected chordal G: c(G) = n - 2 iff the three clique conditions", codim1),
    census(
        "decomposable-regularity",
        "decomposable G: reg adds over parts; reg = n - 2 forces a path part",
        decomposable_regularity,
    ),
    census("cut-vertex-degree", "connected G with a cut vertex of degree >= 4: reg <= n - 3", cut_vertex_degree),
    census(
        "two-neighbors",
        "indecomposable unmixed G, n >= 4, vertex with two adjacent neighbors only: reg <= n - 3",
        two_neighbors,
    ),
    census("disconnected-bound", "any G: reg <= n - sum of component clique-complex dimensions", component_bound),
    census("bipartite-licci", "connected bipartite G: licci iff path", bipartite),
    census("disconnected-licci", "disconnected G with edges: shape route and algebra route agree", disconnected_licci),
    oracle(
        "primary-decomposition-oracle",
        "J_G equals the intersection of its minimal primes",
        Check::PrimaryDecomposition,
        4,
    ),
    oracle("colon-oracle", "J_(H-e) : f_e equals J_((H-e)_e) + I_(H,e) for every edge", Check::Colon, 4),
    oracle("initial-ideal-oracle", "lex lead terms of J_G are the admissible-path monomials", Check::Initial, 5),
    oracle("ohtani-oracle", "J_G = J_(G_v) meet (J_(G-v) + (x_v, y_v)) at every cut vertex", Check::Ohtani, 4),
];

pub fn theorem(id: &str) -> HarnessResult<&'static Theorem> {
    THEOREMS.iter().find(|t| t.id == id).ok_or_else(|| HarnessError::UnknownTheorem {
        id: id.to_string(),
        known: THEOREMS.iter().map(|t| t.id).collect::<Vec<_>>().join(", "),
    })
}

/// Runs one theorem with its own corpus.
pub fn run_verification(id: &str, max_n: usize, workers: usize) -> HarnessResult<VerificationReport> {
    let t = theorem(id)?;
    bei_core::error::tier("theorem tier", max_n, t.max_n)?;
    let corpus = Corpus::new(max_n.max(1), workers)?;
    verify_with(&corpus, id, max_n)
}

/// Runs one theorem against a shared corpus.
pub fn verify_with(corpus: &Corpus, id: &str, max_n: usize) -> HarnessResult<VerificationReport> {
    let t = theorem(id)?;
    bei_core::error::tier("theorem tier", max_n, t.max_n)?;
    let start = Instant::now();
    let mut scan = Scan::default();
    match t.kind {
        Kind::Census(f) => f(corpus, max_n, &mut scan)?,
        Kind::Oracle(check) => {
            let mut graphs = Vec::new();
            for n in 1..=max_n {
                graphs.extend(enumerate_connected(n)?);
            }
            for r in corpus.install(|| run_checks(check, &graphs))? {
                let n = r.labeling.split(';').next().and_then(|s| s.parse().ok()).unwrap_or(0);
                let at = r.at.clone();
                scan.check(&r.graph6, n, r.ok, || at.map_or("identity fails".into(), |a| format!("fails at {a}")));
            }
        }
    }
    Ok(VerificationReport {
        theorem: t.id.to_string(),
        statement: t.statement.to_string(),
        tier: max_n,
        instances: scan.instances_per_n.values().sum(),
        instances_per_n: scan.instances_per_n,
        violations: scan.violations,
        tallies: scan.tallies,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

fn naoki_bound(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.connected(max_n)? {
        let n = e.graph.n();
        let bound = n as isize - maximal_cliques(&e.graph).dim;
        let reg = e.inv.reg as isize;
        s.entry(e, reg <= bound, || format!("reg {reg} > {bound}"));
        if reg == bound {
            s.tally("equality", n);
        }
    }
    Ok(())
}

fn regularity_maximum(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.connected(max_n)? {
        let n = e.graph.n();
        let path = e.graph.is_path_graph();
        let top = e.inv.reg + 1 == n;
        s.entry(e, top == path, || format!("reg {} with path = {path}", e.inv.reg));
        if top {
            s.tally("reg=n-1", n);
        }
    }
    Ok(())
}

fn licci_equivalence(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.connected(max_n)? {
        let by_shape = licci_by_shape(&e.graph)?.licci;
        let by_algebra = licci_by_algebra_from(&e.graph, e.inv)?.licci;
        s.entry(e, by_shape == by_algebra, || format!("shape {by_shape}, algebra {by_algebra}"));
        if by_shape {
            s.tally("licci", e.graph.n());
        }
    }
    Ok(())
}

fn hu_bound_scan(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.connected(max_n)? {
        if licci_by_shape(&e.graph)?.licci {
            s.entry(e, hu_bound(&e.inv), || format!("reg {} height {}", e.inv.reg, e.inv.height));
        }
    }
    Ok(())
}

fn chordal(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.connected(max_n)?.filter(|e| is_chordal(&e.graph)) {
        let by_shape = licci_by_shape(&e.graph)?.licci;
        let by_chordal = chordal_licci_from(&e.graph, e.inv)?.licci;
        let cliques = maximal_cliques(&e.graph).count;
        let ok = by_shape == by_chordal && e.inv.reg <= cliques;
        s.entry(e, ok, || format!("shape {by_shape}, chordal {by_chordal}, reg {} vs c(G) {cliques}", e.inv.reg));
        if by_shape {
            s.tally("licci", e.graph.n());
        }
    }
    Ok(())
}

fn codim1(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.connected(max_n)?.filter(|e| is_chordal(&e.graph)) {
        let n = e.graph.n();
        let holds = codim1_conditions(&e.graph)?.holds;
        let count = maximal_cliques(&e.graph).count;
        s.entry(e, (count + 2 == n) == holds, || format!("c(G) {count}, conditions {holds}"));
        if holds {
            s.tally("c=n-2", n);
        }
    }
    Ok(())
}

fn decomposable_regularity(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.connected(max_n)? {
        let n = e.graph.n();
        let reg = e.inv.reg;
        let witnesses = e.graph.decomposition_witnesses()?;
        if witnesses.is_empty() {
            continue;
        }
        let mut ok = true;
        for w in &witnesses {
            let [a, b] = [&w.parts[0].graph, &w.parts[1].graph];
            let (ra, rb) = (c.lookup(a)?.inv.reg, c.lookup(b)?.inv.reg);
            ok &= reg == ra + rb;
            if reg + 2 == n {
                let split = |p: &Graph, q: &Graph, rq: usize| p.is_path_graph() && rq + 2 == q.n();
                ok &= split(a, b, rb) || split(b, a, ra);
            }
        }
        s.entry(e, ok, || format!("reg {reg} over {} decompositions", witnesses.len()));
        if reg + 2 == n {
            s.tally("reg=n-2", n);
        }
    }
    Ok(())
}

fn cut_vertex_degree(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.connected(max_n)? {
        let g = &e.graph;
        if (0..g.n()).any(|v| g.is_cut_vertex(v) && g.degree(v) >= 4) {
            s.entry(e, e.inv.reg + 3 <= g.n(), || format!("reg {}", e.inv.reg));
        }
    }
    Ok(())
}

/// A vertex of degree two whose neighbors are adjacent.
pub fn has_two_adjacent_neighbors(g: &Graph) -> bool {
    (0..g.n()).any(|v| {
        let nb = g.neighbors(v);
        nb.len() == 2 && g.is_clique(nb)
    })
}

fn two_neighbors(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.connected(max_n)? {
        let g = &e.graph;
        if g.n() >= 4 && e.inv.unmixed && has_two_adjacent_neighbors(g) && g.is_decomposable()?.is_none() {
            s.entry(e, e.inv.reg + 3 <= g.n(), || format!("reg {}", e.inv.reg));
        }
    }
    Ok(())
}

/// `Σ dim Δ(G_i)` over the connected components.
pub fn component_dimension_sum(g: &Graph) -> isize {
    g.connected_components().into_iter().map(|comp| maximal_cliques(&g.induced(comp).graph).dim).sum()
}

fn component_bound(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.entries(max_n)? {
        let bound = e.graph.n() as isize - component_dimension_sum(&e.graph);
        s.entry(e, e.inv.reg as isize <= bound, || format!("reg {} > {bound}", e.inv.reg));
        if !e.graph.is_connected() {
            s.tally("disconnected", e.graph.n());
        }
    }
    Ok(())
}

fn bipartite(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.connected(max_n)?.filter(|e| e.graph.is_bipartite()) {
        let licci = licci_by_algebra_from(&e.graph, e.inv)?.licci;
        let path = classify_shape(&e.graph)? == Shape::Path;
        s.entry(e, licci == path, || format!("licci {licci}, path {path}"));
        if licci {
            s.tally("licci", e.graph.n());
        }
    }
    Ok(())
}

fn disconnected_licci(c: &Corpus, max_n: usize, s: &mut Scan) -> Result<()> {
    for e in c.entries(max_n)?.filter(|e| !e.graph.is_connected() && e.graph.edge_count() > 0) {
        let by_shape = licci_by_shape(&e.graph)?.licci;
        let by_algebra = licci_by_algebra_from(&e.graph, e.inv)?.licci;
        s.entry(e, by_shape == by_algebra, || format!("shape {by_shape}, algebra {by_algebra}"));
        if by_shape {
            s.tally("licci", e.graph.n());
        }
    }
    Ok(())
}
