//! Exact symbolic algebra used to certify the combinatorial modules on small
//! graphs: rational polynomials, Buchberger's algorithm, and ideal equality,
//! intersection and colon.

pub mod checks;
pub mod groebner;
pub mod ideal;
pub mod poly;

pub use checks::{verify_colon_theorem, verify_initial_ideal, verify_ohtani, verify_primary_decomposition};
pub use groebner::{buchberger, is_groebner_basis, normal_form, Budget};
pub use ideal::{ideal_colon, ideal_equal, ideal_intersection, Ideal};
pub use poly::{Monomial, MonomialOrder, PolyContext, Polynomial, MAX_ORACLE_VARS};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::primes::is_cut_set;

/// `J_G`: one generator `f_ij` per edge.
pub fn binomial_edge_ideal(g: &Graph, ctx: PolyContext) -> Ideal {
    assert_eq!(g.n(), ctx.n);
    Ideal::new(ctx, g.edges().into_iter().map(|(i, j)| ctx.f(i, j)))
}

/// `P_S(G)`: the variables of `S` and all 2-minors on each component of `G` minus `S`.
pub fn prime_component_ideal(g: &Graph, s: VertexSet, ctx: PolyContext) -> Result<Ideal> {
    assert_eq!(g.n(), ctx.n);
    if !is_cut_set(g, s) {
        return Err(Error::Precondition(format!("{:?} is not a cut set", s.labels())));
    }
    let mut gens: Vec<Polynomial> = s.iter().flat_map(|i| [ctx.x(i), ctx.y(i)]).collect();
    for comp in g.components_within(g.vertices().difference(s)) {
        let vs: Vec<usize> = comp.iter().collect();
        for (a, &i) in vs.iter().enumerate() {
            for &j in &vs[a + 1..] {
                gens.push(ctx.f(i, j));
            }
        }
    }
    Ok(Ideal::new(ctx, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[usize]) -> VertexSet {
        labels.iter().map(|l| l - 1).collect()
    }

    #[test]
    fn generators() {
        let ctx = PolyContext::new(2, MonomialOrder::LexXY).unwrap();
        let j = binomial_edge_ideal(&Graph::path(2), ctx);
        assert_eq!(j.gens.len(), 1);
        assert_eq!(j.gens[0].render(&ctx), "x1y2 - x2y1");
        let ctx3 = PolyContext::new(3, MonomialOrder::LexXY).unwrap();
        assert_eq!(binomial_edge_ideal(&Graph::complete(3), ctx3).gens.len(), 3);
        assert!(binomial_edge_ideal(&Graph::empty(3), ctx3).gens.is_empty());
    }

    #[test]
    fn prime_components() {
        let ctx = PolyContext::new(3, MonomialOrder::DegRevLex).unwrap();
        let p = prime_component_ideal(&Graph::path(3), VertexSet::EMPTY, ctx).unwrap();
        assert_eq!(p.gens.len(), 3);
        let p = prime_component_ideal(&Graph::path(3), set(&[2]), ctx).unwrap();
        assert_eq!(p.gens.len(), 2);
        assert!(prime_component_ideal(&Graph::path(3), set(&[1]), ctx).is_err());
        let diamond = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let ctx4 = PolyContext::new(4, MonomialOrder::DegRevLex).unwrap();
        let p = prime_component_ideal(&diamond, set(&[2, 3]), ctx4).unwrap();
        let render: Vec<String> = p.gens.iter().map(|g| g.render(&ctx4)).collect();
        assert_eq!(render, vec!["x2", "y2", "x3", "y3"]);
    }
}
