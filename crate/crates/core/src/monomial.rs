//! Squarefree monomials on the `2n` slots `x_1..x_n, y_1..y_n` and their ideals.

use std::fmt::Write as _;

/// Squarefree monomial as a slot bitmask: slot `i` is `x_{i+1}`, slot `n+i` is `y_{i+1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial2n(pub u128);

impl Monomial2n {
    pub const ONE: Monomial2n = Monomial2n(0);

    pub fn x(i: usize) -> Self {
        Monomial2n(1 << i)
    }

    pub fn y(n: usize, i: usize) -> Self {
        Monomial2n(1 << (n + i))
    }

    pub fn times(self, other: Self) -> Self {
        Monomial2n(self.0 | other.0)
    }

    pub fn divides(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// e.g. `x1y2`; the empty product prints as `1`.
    pub fn render(self, n: usize) -> String {
        if self.0 == 0 {
            return "1".into();
        }
        let mut s = String::new();
        for slot in 0..2 * n {
            if self.0 >> slot & 1 == 1 {
                let (c, i) = if slot < n { ('x', slot) } else { ('y', slot - n) };
                write!(s, "{c}{}", i + 1).unwrap();
            }
        }
        s
    }
}

/// A squarefree monomial ideal kept as its minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeMonomialIdeal {
    pub n_vars: usize,
    gens: Vec<Monomial2n>,
}

impl SquarefreeMonomialIdeal {
    /// Drops duplicates and non-minimal generators; sorts by `(degree, bitmask)`.
    pub fn new(n_vars: usize, gens: impl IntoIterator<Item = Monomial2n>) -> Self {
        let mut all: Vec<Monomial2n> = gens.into_iter().collect();
        all.sort_by_key(|m| (m.degree(), m.0));
        all.dedup();
        let mut min: Vec<Monomial2n> = Vec::with_capacity(all.len());
        for m in all {
            if !min.iter().any(|g| g.divides(m)) {
                min.push(m);
            }
        }
        SquarefreeMonomialIdeal { n_vars, gens: min }
    }

    pub fn zero(n_vars: usize) -> Self {
        SquarefreeMonomialIdeal { n_vars, gens: Vec::new() }
    }

    pub fn gens(&self) -> &[Monomial2n] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&Monomial2n::ONE)
    }

    pub fn contains(&self, m: Monomial2n) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars);
        Self::new(self.n_vars, self.gens.iter().chain(&other.gens).copied())
    }

    /// Generators rendered with `n = n_vars / 2` graph vertices.
    pub fn render(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.render(self.n_vars / 2)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimalization() {
        let n = 2;
        let x1y2 = Monomial2n::x(0).times(Monomial2n::y(n, 1));
        let big = x1y2.times(Monomial2n::x(1));
        let i = SquarefreeMonomialIdeal::new(4, [big, x1y2, x1y2]);
        assert_eq!(i.gens(), &[x1y2]);
        assert!(i.contains(big));
        assert!(!i.contains(Monomial2n::x(0)));
        assert_eq!(i.render(), vec!["x1y2"]);
        assert!(!i.is_unit());
        assert!(SquarefreeMonomialIdeal::new(4, [Monomial2n::ONE, x1y2]).is_unit());
    }
}
