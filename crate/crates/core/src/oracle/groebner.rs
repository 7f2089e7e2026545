//! Buchberger's algorithm with the normal selection strategy, the product
//! criterion and the chain criterion.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::poly::{Monomial, PolyContext, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// S-pairs reduced before giving up.
    pub max_pairs: usize,
    /// Largest total degree of any basis element.
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 200_000, max_degree: 24 }
    }
}

/// Full reduction of `f` modulo `basis` (no term of the result is divisible by a lead monomial).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ctx: &PolyContext) -> Polynomial {
    let mut p = f.clone();
    let mut rest: Vec<(Monomial, num_rational::BigRational)> = Vec::new();
    while let Some((m, c)) = p.lead().cloned() {
        match basis.iter().find(|g| g.lead_monomial().divides(&m)) {
            Some(g) => {
                let (gm, gc) = g.lead().unwrap();
                let q = gm.quotient(&m);
                p = p.sub(&g.mul_term(&q, &(&c / gc)), ctx);
            }
            None => {
                rest.push((m, c));
                p.terms.remove(0);
            }
        }
    }
    Polynomial { terms: rest }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, ctx: &PolyContext) -> Polynomial {
    let (fm, fc) = f.lead().unwrap();
    let (gm, gc) = g.lead().unwrap();
    let l = fm.lcm(gm);
    f.mul_term(&fm.quotient(&l), &gc.clone()).sub(&g.mul_term(&gm.quotient(&l), &fc.clone()), ctx)
}

fn check_degree(p: &Polynomial, budget: &Budget) -> Result<()> {
    if p.degree() > budget.max_degree {
        return Err(Error::Budget(format!("basis degree {} exceeds {}", p.degree(), budget.max_degree)));
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by `gens`: monic, sorted by
/// decreasing lead monomial.
pub fn buchberger(gens: &[Polynomial], ctx: &PolyContext, budget: &Budget) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis, ctx);
        if !r.is_zero() {
            check_degree(&r, budget)?;
            basis.push(r.monic());
        }
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    let mut processed = 0usize;
    loop {
        // Normal selection: the pair with the smallest lcm.
        let next = pairs.iter().copied().min_by(|&(a, b), &(c, d)| {
            let l1 = basis[a].lead_monomial().lcm(&basis[b].lead_monomial());
            let l2 = basis[c].lead_monomial().lcm(&basis[d].lead_monomial());
            ctx.cmp(&l1, &l2).then((a, b).cmp(&(c, d)))
        });
        let Some((i, j)) = next else { break };
        pairs.remove(&(i, j));
        let (li, lj) = (basis[i].lead_monomial(), basis[j].lead_monomial());
        if li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead_monomial().divides(&l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::Budget(format!("more than {} S-pairs", budget.max_pairs)));
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j], ctx), &basis, ctx);
        if r.is_zero() {
            continue;
        }
        check_degree(&r, budget)?;
        let k = basis.len();
        basis.push(r.monic());
        for a in 0..k {
            pairs.insert((a, k));
        }
    }
    Ok(reduce_basis(basis, ctx))
}

/// Minimalizes and interreduces a Gröbner basis.
fn reduce_basis(mut basis: Vec<Polynomial>, ctx: &PolyContext) -> Vec<Polynomial> {
    basis.sort_by(|a, b| ctx.cmp(&a.lead_monomial(), &b.lead_monomial()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.lead_monomial();
        if !minimal.iter().any(|h| h.lead_monomial().divides(&lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|&(a, _)| a != k).map(|(_, p)| p.clone()).collect();
        let (m, c) = minimal[k].lead().cloned().unwrap();
        let tail = Polynomial { terms: minimal[k].terms[1..].to_vec() };
        let mut terms = vec![(m, c)];
        terms.extend(normal_form(&tail, &others, ctx).terms);
        reduced.push(Polynomial { terms }.monic());
    }
    reduced.sort_by(|a, b| ctx.cmp(&b.lead_monomial(), &a.lead_monomial()));
    reduced
}

/// Every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], ctx: &PolyContext) -> bool {
    (0..basis.len())
        .all(|j| (0..j).all(|i| normal_form(&s_polynomial(&basis[i], &basis[j], ctx), basis, ctx).is_zero()))
}
