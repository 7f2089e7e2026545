//! Ideals given by generators, with equality, intersection and colon.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial::SquarefreeMonomialIdeal;

use super::groebner::{buchberger, normal_form, Budget};
use super::poly::{Monomial, PolyContext, Polynomial};

#[derive(Clone, Debug)]
pub struct Ideal {
    pub ctx: PolyContext,
    pub gens: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ctx: PolyContext, gens: impl IntoIterator<Item = Polynomial>) -> Self {
        Ideal { ctx, gens: gens.into_iter().filter(|g| !g.is_zero()).collect() }
    }

    pub fn from_monomials(ctx: PolyContext, m: &SquarefreeMonomialIdeal) -> Self {
        assert_eq!(m.n_vars, 2 * ctx.n);
        let gens = m.gens().iter().map(|g| {
            let mut mono = Monomial::ONE;
            for slot in 0..m.n_vars {
                if g.0 >> slot & 1 == 1 {
                    mono.exps[slot] = 1;
                }
            }
            Polynomial::monomial(mono, BigRational::one())
        });
        Ideal::new(ctx, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ctx, other.ctx);
        Ideal::new(self.ctx, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn groebner(&self, budget: &Budget) -> Result<Vec<Polynomial>> {
        buchberger(&self.gens, &self.ctx, budget)
    }

    pub fn contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        let gb = self.groebner(budget)?;
        Ok(normal_form(f, &gb, &self.ctx).is_zero())
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        let gb = other.groebner(budget)?;
        Ok(self.gens.iter().all(|f| normal_form(f, &gb, &self.ctx).is_zero()))
    }
}

/// Mutual membership of generators against each reduced basis.
pub fn ideal_equal(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<bool> {
    if a.ctx != b.ctx {
        return Err(Error::Precondition("ideals live in different contexts".into()));
    }
    Ok(a.is_subset(b, budget)? && b.is_subset(a, budget)?)
}

/// `a ∩ b` by eliminating `t` from `t·a + (1 − t)·b`.
pub fn ideal_intersection(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    if a.ctx != b.ctx {
        return Err(Error::Precondition("ideals live in different contexts".into()));
    }
    let base = a.ctx;
    let ext = base.with_aux()?;
    let t = ext.t();
    let one_minus_t = ext.constant(1).sub(&t, &ext);
    let gens: Vec<Polynomial> = a
        .gens
        .iter()
        .map(|f| f.resort(&ext).mul(&t, &ext))
        .chain(b.gens.iter().map(|g| g.resort(&ext).mul(&one_minus_t, &ext)))
        .collect();
    let gb = buchberger(&gens, &ext, budget)?;
    let slot = ext.aux_slot();
    Ok(Ideal::new(base, gb.into_iter().filter(|p| !p.involves(slot)).map(|p| p.resort(&base))))
}

/// `h / f` when `f` divides `h` exactly.
fn divide_exact(h: &Polynomial, f: &Polynomial, ctx: &PolyContext) -> Result<Polynomial> {
    let (fm, fc) = f.lead().cloned().ok_or_else(|| Error::Precondition("division by zero".into()))?;
    let mut rest = h.clone();
    let mut q = Polynomial::zero();
    while let Some((m, c)) = rest.lead().cloned() {
        if !fm.divides(&m) {
            return Err(Error::Precondition("inexact polynomial division".into()));
        }
        let term = Polynomial::monomial(fm.quotient(&m), &c / &fc);
        rest = rest.sub(&f.mul(&term, ctx), ctx);
        q = q.add(&term, ctx);
    }
    Ok(q)
}

/// `a : f`, computed as `(a ∩ (f)) / f`.
pub fn ideal_colon(a: &Ideal, f: &Polynomial, budget: &Budget) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::Precondition("colon by the zero polynomial".into()));
    }
    let principal = Ideal::new(a.ctx, [f.clone()]);
    let meet = ideal_intersection(a, &principal, budget)?;
    let quotients = meet.gens.iter().map(|h| divide_exact(h, f, &a.ctx)).collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(a.ctx, quotients))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::poly::MonomialOrder;

    fn ctx(n: usize) -> PolyContext {
        PolyContext::new(n, MonomialOrder::DegRevLex).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn intersections() {
        let c = ctx(2);
        let x1 = Ideal::new(c, [c.x(0)]);
        let y1 = Ideal::new(c, [c.y(0)]);
        let meet = ideal_intersection(&x1, &y1, &b()).unwrap();
        let expected = Ideal::new(c, [c.x(0).mul(&c.y(0), &c)]);
        assert!(ideal_equal(&meet, &expected, &b()).unwrap());

        let p = Ideal::new(c, [c.x(0), c.y(0)]);
        let q = Ideal::new(c, [c.x(1), c.y(1)]);
        let meet = ideal_intersection(&p, &q, &b()).unwrap();
        let prods = [(c.x(0), c.x(1)), (c.x(0), c.y(1)), (c.y(0), c.x(1)), (c.y(0), c.y(1))];
        let expected = Ideal::new(c, prods.iter().map(|(u, v)| u.mul(v, &c)));
        assert!(ideal_equal(&meet, &expected, &b()).unwrap());
    }

    #[test]
    fn colons() {
        let c = ctx(2);
        let i = Ideal::new(c, [c.x(0).mul(&c.y(0), &c)]);
        let q = ideal_colon(&i, &c.x(0), &b()).unwrap();
        assert!(ideal_equal(&q, &Ideal::new(c, [c.y(0)]), &b()).unwrap());
        // x2 is a nonzerodivisor modulo (x1 y1).
        let q = ideal_colon(&i, &c.x(1), &b()).unwrap();
        assert!(ideal_equal(&q, &i, &b()).unwrap());
    }

    #[test]
    fn equality_by_sign() {
        let c = ctx(2);
        let f = c.f(0, 1);
        let g = c.f(1, 0);
        assert!(ideal_equal(&Ideal::new(c, [f]), &Ideal::new(c, [g]), &b()).unwrap());
    }

    #[test]
    fn exact_division() {
        let c = ctx(2);
        let f = c.f(0, 1);
        let h = f.mul(&c.x(1).add(&c.y(0), &c), &c);
        assert_eq!(divide_exact(&h, &f, &c).unwrap(), c.x(1).add(&c.y(0), &c));
        assert!(divide_exact(&c.x(0), &c.y(0), &c).is_err());
    }
}
