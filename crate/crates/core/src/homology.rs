//! Reduced simplicial homology with rational coefficients.
//!
//! Ranks of boundary maps are computed by integer column reduction: each new
//! column is cleared against earlier pivots with fraction-free combinations and
//! divided by its content. Coefficients start as checked `i64` and the whole
//! rank is recomputed over `BigInt` if any step overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use crate::clique::SimplicialComplex;
use crate::error::{tier, Result};

pub const MAX_HOMOLOGY_VERTICES: usize = 16;

type SparseCol<T> = Vec<(u32, T)>;

fn combine<T>(c: &SparseCol<T>, p: &SparseCol<T>, a: &T, b: &T) -> Option<SparseCol<T>>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    // b*c - a*p; the last entries cancel.
    let mut out = Vec::with_capacity(c.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < p.len() {
        let take_c = j == p.len() || (i < c.len() && c[i].0 < p[j].0);
        let take_p = i == c.len() || (j < p.len() && p[j].0 < c[i].0);
        let (row, v) = if take_c {
            let r = (c[i].0, b.checked_mul(&c[i].1)?);
            i += 1;
            r
        } else if take_p {
            let r = (p[j].0, T::zero().checked_sub(&a.checked_mul(&p[j].1)?)?);
            j += 1;
            r
        } else {
            let r = (c[i].0, b.checked_mul(&c[i].1)?.checked_sub(&a.checked_mul(&p[j].1)?)?);
            i += 1;
            j += 1;
            r
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    let content = out.iter().fold(T::zero(), |g, (_, v)| g.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for e in &mut out {
            e.1 = e.1.div_floor(&content);
        }
    }
    Some(out)
}

fn rank_generic<T>(columns: &[Vec<(u32, i8)>], rows: usize) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i8>,
{
    let mut pivots: Vec<Option<SparseCol<T>>> = vec![None; rows];
    let mut rank = 0;
    for col in columns {
        let mut c: SparseCol<T> = col.iter().map(|&(r, v)| (r, T::from(v))).collect();
        while let Some((row, lead)) = c.last().cloned() {
            match &pivots[row as usize] {
                Some(p) => {
                    let plead = &p.last().unwrap().1;
                    let g = lead.gcd(plead);
                    let (a, b) = (lead.div_floor(&g), plead.div_floor(&g));
                    c = combine(&c, p, &a, &b)?;
                }
                None => {
                    pivots[row as usize] = Some(c);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// Rank over Q of a sparse integer matrix given by columns of `(row, entry)` sorted by row.
pub fn rank_over_q(columns: &[Vec<(u32, i8)>], rows: usize) -> usize {
    rank_generic::<i64>(columns, rows)
        .or_else(|| rank_generic::<BigInt>(columns, rows))
        .expect("BigInt arithmetic does not overflow")
}

/// Rank over GF(2) of a dense bit matrix stored column by column, `words` words per column.
pub fn rank_mod2(matrix: &mut [u64], words: usize, rows: usize) -> usize {
    if words == 0 {
        return 0;
    }
    let mut owner = vec![u32::MAX; rows];
    let mut rank = 0;
    for c in 0..matrix.len() / words {
        loop {
            let col = &matrix[c * words..(c + 1) * words];
            let Some(w) = col.iter().rposition(|&x| x != 0) else { break };
            let top = w * 64 + 63 - col[w].leading_zeros() as usize;
            let p = owner[top];
            if p == u32::MAX {
                owner[top] = c as u32;
                rank += 1;
                break;
            }
            let (lo, hi) = matrix.split_at_mut(c * words);
            let pivot = &lo[p as usize * words..(p as usize + 1) * words];
            for (x, y) in hi[..=w].iter_mut().zip(pivot) {
                *x ^= y;
            }
        }
    }
    rank
}

fn boundary_mod2(by_size: &[Vec<u32>], s: usize, index: &[u32]) -> usize {
    let rows = by_size[s - 1].len();
    let words = rows.div_ceil(64);
    let mut matrix = vec![0u64; by_size[s].len() * words];
    for (c, &f) in by_size[s].iter().enumerate() {
        let mut rest = f;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            let r = index[(f & !bit) as usize] as usize;
            matrix[c * words + r / 64] |= 1 << (r % 64);
            rest &= rest - 1;
        }
    }
    rank_mod2(&mut matrix, words, rows)
}

fn boundary_columns(by_size: &[Vec<u32>], s: usize, index: &[u32]) -> Vec<Vec<(u32, i8)>> {
    by_size[s]
        .iter()
        .map(|&f| {
            let mut col: Vec<(u32, i8)> = Vec::with_capacity(s);
            let mut rest = f;
            let mut m = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                let sign = if m % 2 == 0 { 1 } else { -1 };
                col.push((index[(f & !bit) as usize], sign));
                rest &= rest - 1;
                m += 1;
            }
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

fn homology_from_ranks(by_size: &[Vec<u32>], ranks: &[usize]) -> Vec<usize> {
    (0..by_size.len()).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

/// Reduced homology ranks `[H̃_{-1}, H̃_0, ..., H̃_{d}]` from the faces of a
/// complex grouped by size (`by_size[0]` holds the empty face when present).
/// `index` must have room for every face bitmask; it is used as scratch.
///
/// Boundary ranks are first taken over GF(2), which bound the rational ranks
/// from below, so mod-2 homology bounds rational homology from above. Both
/// have the same Euler characteristic, so when the mod-2 homology sits in at
/// most one degree it equals the rational homology. Otherwise the ranks are
/// recomputed exactly.
pub fn homology_of_faces(by_size: &[Vec<u32>], index: &mut [u32]) -> Vec<usize> {
    if by_size.is_empty() {
        return Vec::new();
    }
    for faces in by_size {
        for (k, &f) in faces.iter().enumerate() {
            index[f as usize] = k as u32;
        }
    }
    // ranks[s]: rank of the boundary from size-s faces to size-(s-1) faces.
    let mut ranks = vec![0usize; by_size.len() + 1];
    for s in 1..by_size.len() {
        if by_size[s].is_empty() {
            continue;
        }
        ranks[s] = if s == 1 { usize::from(!by_size[0].is_empty()) } else { boundary_mod2(by_size, s, index) };
    }
    let mod2 = homology_from_ranks(by_size, &ranks);
    if mod2.iter().filter(|&&h| h > 0).count() <= 1 {
        return mod2;
    }
    homology_of_faces_exact(by_size, index)
}

/// As [`homology_of_faces`], always by exact elimination over Q.
pub fn homology_of_faces_exact(by_size: &[Vec<u32>], index: &mut [u32]) -> Vec<usize> {
    if by_size.is_empty() {
        return Vec::new();
    }
    for faces in by_size {
        for (k, &f) in faces.iter().enumerate() {
            index[f as usize] = k as u32;
        }
    }
    let mut ranks = vec![0usize; by_size.len() + 1];
    for s in 1..by_size.len() {
        if by_size[s].is_empty() {
            continue;
        }
        ranks[s] = if s == 1 {
            usize::from(!by_size[0].is_empty())
        } else {
            rank_over_q(&boundary_columns(by_size, s, index), by_size[s - 1].len())
        };
    }
    homology_from_ranks(by_size, &ranks)
}

/// `Σ (-1)^(s-1) f_s` over face sizes `s`, the empty face counting in size 0.
pub fn reduced_euler_characteristic(by_size: &[Vec<u32>]) -> i64 {
    by_size.iter().enumerate().map(|(s, f)| if s % 2 == 1 { f.len() as i64 } else { -(f.len() as i64) }).sum()
}

/// Alternating sum `Σ (-1)^d rank H̃_d` of a homology vector starting at `d = -1`.
pub fn alternating_sum(ranks: &[usize]) -> i64 {
    ranks.iter().enumerate().map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) }).sum()
}

pub fn faces_by_size(c: &SimplicialComplex) -> Vec<Vec<u32>> {
    let mut seen = vec![false; 1 << c.vertex_count];
    let mut by_size: Vec<Vec<u32>> = Vec::new();
    for &facet in &c.facets {
        let facet = facet as u32;
        let mut sub = facet;
        loop {
            if !seen[sub as usize] {
                seen[sub as usize] = true;
                let s = sub.count_ones() as usize;
                if by_size.len() <= s {
                    by_size.resize(s + 1, Vec::new());
                }
                by_size[s].push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & facet;
        }
    }
    for faces in &mut by_size {
        faces.sort_unstable();
    }
    by_size
}

/// Reduced homology ranks for dimensions `-1..=dim C`; empty for the void complex.
pub fn reduced_homology(c: &SimplicialComplex) -> Result<Vec<usize>> {
    tier("homology vertex count", c.vertex_count, MAX_HOMOLOGY_VERTICES)?;
    let by_size = faces_by_size(c);
    let mut index = vec![0u32; 1 << c.vertex_count];
    Ok(homology_of_faces(&by_size, &mut index))
}
