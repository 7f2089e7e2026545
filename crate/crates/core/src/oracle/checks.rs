//! Symbolic cross-checks of the combinatorial descriptions of `J_G`.

use crate::degeneration::{colon_generators, initial_ideal};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::Monomial2n;
use crate::primes::cut_sets;

use super::groebner::{is_groebner_basis, Budget};
use super::ideal::{ideal_colon, ideal_equal, ideal_intersection, Ideal};
use super::poly::{MonomialOrder, PolyContext};
use super::{binomial_edge_ideal, prime_component_ideal};

fn grevlex(g: &Graph) -> Result<PolyContext> {
    let ctx = PolyContext::new(g.n(), MonomialOrder::DegRevLex)?;
    // Intersections need room for the auxiliary variable.
    ctx.with_aux()?;
    Ok(ctx)
}

/// `J_G` equals the intersection of the prime ideals indexed by its cut sets.
pub fn verify_primary_decomposition(g: &Graph) -> Result<bool> {
    let ctx = grevlex(g)?;
    let budget = Budget::default();
    let mut meet: Option<Ideal> = None;
    for c in cut_sets(g) {
        let p = prime_component_ideal(g, c.set, ctx)?;
        meet = Some(match meet {
            None => p,
            Some(m) => ideal_intersection(&m, &p, &budget)?,
        });
    }
    let meet = meet.expect("the empty set is always a cut set");
    ideal_equal(&binomial_edge_ideal(g, ctx), &meet, &budget)
}

/// `J_{H∖e} : f_e = J_{(H∖e)_e} + I_{H,e}` for the edge `e = {i, j}` of `H`.
pub fn verify_colon_theorem(h: &Graph, i: usize, j: usize) -> Result<bool> {
    if i == j || !h.has_edge(i, j) {
        return Err(Error::EdgeMissing(i + 1, j + 1));
    }
    let ctx = grevlex(h)?;
    let budget = Budget::default();
    let minus = h.without_edge(i, j);
    let lhs = ideal_colon(&binomial_edge_ideal(&minus, ctx), &ctx.f(i, j), &budget)?;
    let completed = binomial_edge_ideal(&minus.edge_completion(i, j), ctx);
    let rhs = completed.sum(&Ideal::from_monomials(ctx, &colon_generators(h, i, j)));
    ideal_equal(&lhs, &rhs, &budget)
}

/// The lex lead terms of the reduced Gröbner basis of `J_G` are exactly the
/// admissible-path monomials.
pub fn verify_initial_ideal(g: &Graph) -> Result<bool> {
    let ctx = PolyContext::new(g.n(), MonomialOrder::LexXY)?;
    let gb = binomial_edge_ideal(g, ctx).groebner(&Budget::default())?;
    debug_assert!(is_groebner_basis(&gb, &ctx));
    let mut leads = Vec::with_capacity(gb.len());
    for p in &gb {
        let m = p.lead_monomial();
        if !m.is_squarefree() {
            return Ok(false);
        }
        let bits = (0..2 * g.n()).filter(|&s| m.exps[s] == 1).fold(0u128, |a, s| a | 1 << s);
        leads.push(Monomial2n(bits));
    }
    leads.sort_by_key(|m| (m.degree(), m.0));
    Ok(leads == initial_ideal(g).gens())
}

/// `J_G = J_{G_v} ∩ (J_{G∖v} + (x_v, y_v))` at a cut vertex `v`.
pub fn verify_ohtani(g: &Graph, v: usize) -> Result<bool> {
    if !g.is_cut_vertex(v) {
        return Err(Error::Precondition(format!("vertex {} is not a cut vertex", v + 1)));
    }
    let ctx = grevlex(g)?;
    let budget = Budget::default();
    let left = binomial_edge_ideal(&g.ohtani_completion(v), ctx);
    let right = binomial_edge_ideal(&g.isolate(v), ctx).sum(&Ideal::new(ctx, [ctx.x(v), ctx.y(v)]));
    let meet = ideal_intersection(&left, &right, &budget)?;
    ideal_equal(&binomial_edge_ideal(g, ctx), &meet, &budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn primary_decomposition() {
        assert!(verify_primary_decomposition(&Graph::path(3)).unwrap());
        assert!(verify_primary_decomposition(&diamond()).unwrap());
        assert!(verify_primary_decomposition(&Graph::complete(4)).unwrap());
    }

    #[test]
    fn colon_theorem() {
        assert!(verify_colon_theorem(&Graph::complete(3), 0, 2).unwrap());
        assert!(verify_colon_theorem(&Graph::path(3), 0, 1).unwrap());
        assert!(verify_colon_theorem(&diamond(), 1, 2).unwrap());
        assert_eq!(verify_colon_theorem(&Graph::path(3), 0, 2), Err(Error::EdgeMissing(1, 3)));
    }

    #[test]
    fn initial_ideal_agreement() {
        let g = Graph::from_edges(3, &[(1, 2), (1, 3)]).unwrap();
        assert!(verify_initial_ideal(&g).unwrap());
        assert!(verify_initial_ideal(&Graph::complete(4)).unwrap());
    }

    #[test]
    fn ohtani() {
        assert!(verify_ohtani(&Graph::path(3), 1).unwrap());
        assert!(verify_ohtani(&Graph::star(3), 0).unwrap());
        assert!(verify_ohtani(&Graph::complete(3), 0).is_err());
    }
}
