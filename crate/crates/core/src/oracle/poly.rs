//! Exact polynomials in `x_1..x_n, y_1..y_n` (and optionally one auxiliary
//! variable `t`) with rational coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{tier, Result};

/// Largest number of variables the oracle handles, auxiliary included.
pub const MAX_ORACLE_VARS: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lex with `t > x_1 > ... > x_n > y_1 > ... > y_n`.
    LexXY,
    /// Graded reverse lex with `t > x_1 > ... > y_n`.
    DegRevLex,
    /// `t` eliminated first, ties broken by graded reverse lex on the rest.
    EliminateAux,
}

/// Exponent vector: slot `i < n` is `x_{i+1}`, slot `n + i` is `y_{i+1}`, slot `2n` is `t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exps: [u8; MAX_ORACLE_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_ORACLE_VARS] };

    pub fn var(slot: usize) -> Self {
        let mut m = Self::ONE;
        m.exps[slot] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps) {
            *a += b;
        }
        m
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps).all(|(&a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient(&self, other: &Self) -> Self {
        let mut m = *other;
        for (a, b) in m.exps.iter_mut().zip(self.exps) {
            *a -= b;
        }
        m
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps) {
            *a = (*a).max(b);
        }
        m
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps).all(|(&a, b)| a == 0 || b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyContext {
    pub n: usize,
    pub aux: bool,
    pub order: MonomialOrder,
}

impl PolyContext {
    pub fn new(n: usize, order: MonomialOrder) -> Result<Self> {
        tier("oracle variable count", 2 * n, MAX_ORACLE_VARS)?;
        Ok(PolyContext { n, aux: false, order })
    }

    /// The same ring with `t` adjoined, under the elimination order.
    pub fn with_aux(&self) -> Result<Self> {
        tier("oracle variable count", 2 * self.n + 1, MAX_ORACLE_VARS)?;
        Ok(PolyContext { n: self.n, aux: true, order: MonomialOrder::EliminateAux })
    }

    pub fn var_count(&self) -> usize {
        2 * self.n + usize::from(self.aux)
    }

    pub fn aux_slot(&self) -> usize {
        2 * self.n
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let t = self.aux_slot();
        let first_diff = |slots: &mut dyn Iterator<Item = usize>, rev: bool| {
            slots
                .map(|s| if rev { b.exps[s].cmp(&a.exps[s]) } else { a.exps[s].cmp(&b.exps[s]) })
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        let aux = self.aux.then_some(t);
        match self.order {
            MonomialOrder::LexXY => first_diff(&mut aux.into_iter().chain(0..2 * self.n), false),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // The smallest variable is y_n; t is the largest.
                first_diff(&mut (0..2 * self.n).rev().chain(aux), true)
            }),
            MonomialOrder::EliminateAux => {
                let deg = |m: &Monomial| m.degree() - m.exps[t] as u32;
                a.exps[t]
                    .cmp(&b.exps[t])
                    .then_with(|| deg(a).cmp(&deg(b)))
                    .then_with(|| first_diff(&mut (0..2 * self.n).rev(), true))
            }
        }
    }

    pub fn x(&self, i: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(i), BigRational::one())
    }

    pub fn y(&self, i: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(self.n + i), BigRational::one())
    }

    pub fn t(&self) -> Polynomial {
        assert!(self.aux);
        Polynomial::monomial(Monomial::var(self.aux_slot()), BigRational::one())
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        Polynomial::monomial(Monomial::ONE, BigRational::from_integer(BigInt::from(c)))
    }

    /// `f_ij = x_i y_j − x_j y_i` (0-based `i`, `j`).
    pub fn f(&self, i: usize, j: usize) -> Polynomial {
        self.x(i).mul(&self.y(j), self).sub(&self.x(j).mul(&self.y(i), self), self)
    }

    /// Renders a monomial as e.g. `x1^2y3`.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for slot in 0..self.var_count() {
            let e = m.exps[slot];
            if e == 0 {
                continue;
            }
            let name = if slot == self.aux_slot() {
                "t".to_string()
            } else if slot < self.n {
                format!("x{}", slot + 1)
            } else {
                format!("y{}", slot - self.n + 1)
            };
            s.push_str(&name);
            if e > 1 {
                s.push_str(&format!("^{e}"));
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// Terms in strictly decreasing order for the context they were built in; no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    pub terms: Vec<(Monomial, BigRational)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: vec![(m, c)] }
    }

    /// Collects arbitrary terms, merging equal monomials and sorting for `ctx`.
    pub fn from_terms(ctx: &PolyContext, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut v: Vec<(Monomial, BigRational)> = terms.into_iter().collect();
        v.sort_by(|a, b| ctx.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Monomial {
        self.terms[0].0
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// Re-sorts the terms for another context over the same exponent layout.
    pub fn resort(&self, ctx: &PolyContext) -> Self {
        Self::from_terms(ctx, self.terms.iter().cloned())
    }

    fn merge(&self, other: &Self, ctx: &PolyContext, sign: i32) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => ctx.cmp(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((*m, if sign > 0 { c.clone() } else { -c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if sign > 0 {
                        &self.terms[i].1 + &other.terms[j].1
                    } else {
                        &self.terms[i].1 - &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, other: &Self, ctx: &PolyContext) -> Self {
        self.merge(other, ctx, 1)
    }

    pub fn sub(&self, other: &Self, ctx: &PolyContext) -> Self {
        self.merge(other, ctx, -1)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect() }
    }

    /// Multiplication by a term preserves the order of the terms.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect() }
    }

    pub fn mul(&self, other: &Self, ctx: &PolyContext) -> Self {
        other.terms.iter().fold(Self::zero(), |acc, (m, c)| acc.add(&self.mul_term(m, c), ctx))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.lead() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Self::zero(),
        }
    }

    pub fn involves(&self, slot: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exps[slot] > 0)
    }

    pub fn render(&self, ctx: &PolyContext) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigRational::zero();
            if k > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let a = if neg { -c.clone() } else { c.clone() };
            let mono = ctx.render_monomial(m);
            if a.is_one() {
                s.push_str(&mono);
            } else if mono == "1" {
                s.push_str(&a.to_string());
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}*{:?}", &m.exps[..])).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let ctx = PolyContext::new(2, MonomialOrder::LexXY).unwrap();
        let x2 = Monomial::var(1);
        let y1y1 = Monomial::var(2).mul(&Monomial::var(2));
        assert_eq!(ctx.cmp(&x2, &y1y1), Ordering::Greater);
        let g = PolyContext::new(2, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(g.cmp(&x2, &y1y1), Ordering::Less);
        // x1y2 vs x2y1 under grevlex: smallest variable y2 decides.
        let x1y2 = Monomial::var(0).mul(&Monomial::var(3));
        let x2y1 = Monomial::var(1).mul(&Monomial::var(2));
        assert_eq!(g.cmp(&x1y2, &x2y1), Ordering::Less);
        assert_eq!(ctx.cmp(&x1y2, &x2y1), Ordering::Greater);
        let e = g.with_aux().unwrap();
        let t = Monomial::var(4);
        assert_eq!(e.cmp(&t, &y1y1.mul(&x2)), Ordering::Greater);
    }

    #[test]
    fn arithmetic() {
        let ctx = PolyContext::new(2, MonomialOrder::LexXY).unwrap();
        let f = ctx.f(0, 1);
        assert_eq!(f.render(&ctx), "x1y2 - x2y1");
        let g = f.mul(&f, &ctx);
        assert_eq!(g.terms.len(), 3);
        assert!(f.sub(&f, &ctx).is_zero());
        assert_eq!(f.add(&ctx.constant(3), &ctx).render(&ctx), "x1y2 - x2y1 + 3");
    }
}
