//! Regularity, depth, dimension and Cohen–Macaulayness of `S/J_G`.
//!
//! `reg` and `pd` come from the Betti table of the squarefree initial ideal,
//! computed per connected component and summed; `dim` comes from the minimal
//! primes.

use serde::Serialize;

use crate::degeneration::{betti_table_with, initial_ideal};
use crate::error::{tier, Result};
use crate::graph::Graph;
use crate::primes::minimal_primes;

/// Largest component size scanned by default.
pub const MAX_COMPONENT_N: usize = 7;
/// Largest component size with `best_effort`.
pub const MAX_COMPONENT_N_BEST_EFFORT: usize = 8;
/// Largest whole-graph vertex count (the cut-set scan is `2^n`).
pub const MAX_GRAPH_N: usize = 16;

#[derive(Clone, Copy, Debug, Default)]
pub struct InvariantOptions {
    pub best_effort: bool,
    pub parallel: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub n: usize,
    pub reg: usize,
    pub pd: usize,
    pub depth: usize,
    pub dim: usize,
    pub height: usize,
    pub indeg: Option<usize>,
    pub unmixed: bool,
    pub cm: bool,
}

/// `(reg, pd)` of `S/J_G` for a connected graph.
pub fn reg_pd_connected(g: &Graph, opts: InvariantOptions) -> Result<(usize, usize)> {
    if g.n() <= 1 {
        return Ok((0, 0));
    }
    let max = if opts.best_effort { MAX_COMPONENT_N_BEST_EFFORT } else { MAX_COMPONENT_N };
    tier("component vertex count", g.n(), max)?;
    let t = betti_table_with(&initial_ideal(g), opts.parallel)?;
    Ok((t.reg, t.pd))
}

pub fn invariants(g: &Graph) -> Result<InvariantRecord> {
    invariants_with(g, InvariantOptions::default())
}

pub fn invariants_with(g: &Graph, opts: InvariantOptions) -> Result<InvariantRecord> {
    let n = g.n();
    tier("vertex count", n, MAX_GRAPH_N)?;
    let (mut reg, mut pd) = (0, 0);
    for comp in g.connected_components() {
        let (r, p) = reg_pd_connected(&g.induced(comp).graph, opts)?;
        reg += r;
        pd += p;
    }
    let primes = minimal_primes(g);
    let depth = 2 * n - pd;
    let dim = primes.dim_quotient;
    debug_assert!(depth <= dim);
    let cm = depth == dim;
    debug_assert!(!cm || primes.unmixed);
    Ok(InvariantRecord {
        n,
        reg,
        pd,
        depth,
        dim,
        height: primes.height_ideal,
        indeg: (g.edge_count() > 0).then_some(2),
        unmixed: primes.unmixed,
        cm,
    })
}
