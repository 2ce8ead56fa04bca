//! Straightening: rewriting column tableaux into the semistandard basis
//! using Grassmann column sorting and Plücker exchanges.
//!
//! The rewrite loop finds the leftmost adjacent column pair and topmost row
//! that violate semistandardness and replaces the tableau by its exchange
//! tableaux across the top boxes of the right column. Exchanges preserve
//! the multiset of entries and every product term is strictly larger in the
//! reversed column reading word, so the rewrite terminates.
//! Non-semistandard tableaux recur heavily across matrix columns, so
//! results are memoized.

use std::collections::{BTreeMap, HashMap};

use num::{BigRational, One, Zero};

use crate::exterior::{normalize_filling, ColumnTableau, XVector};
use crate::shapes::{Partition, Ssyt};

/// A formal rational combination of semistandard tableaux of one shape.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurVector {
    shape: Partition,
    terms: BTreeMap<Ssyt, BigRational>,
}

impl SchurVector {
    pub fn zero(shape: Partition) -> SchurVector {
        SchurVector {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(t: Ssyt) -> SchurVector {
        let mut v = SchurVector::zero(t.shape());
        v.add_term(t, BigRational::one());
        v
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn terms(&self) -> &BTreeMap<Ssyt, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t: Ssyt, c: BigRational) {
        debug_assert_eq!(t.shape(), self.shape);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SchurVector, c: &BigRational) {
        debug_assert_eq!(self.shape, other.shape);
        for (t, v) in &other.terms {
            self.add_term(t.clone(), v * c);
        }
    }

    pub fn scale(&mut self, c: &BigRational) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
    }
}

/// Converts a semistandard tableau to its column form.
pub fn ssyt_to_columns(t: &Ssyt) -> ColumnTableau {
    let cols = t.rows().first().map_or(0, |r| r.len());
    let columns = (0..cols)
        .map(|j| {
            t.rows()
                .iter()
                .filter(|r| j < r.len())
                .map(|r| r[j])
                .collect()
        })
        .collect();
    ColumnTableau::new(columns)
}

/// Reads a semistandard column tableau back as row-form `Ssyt`. The column
/// lengths must weakly decrease.
pub fn columns_to_ssyt(t: &ColumnTableau) -> Ssyt {
    let height = t.columns().first().map_or(0, |c| c.len());
    let rows: Vec<Vec<usize>> = (0..height)
        .map(|r| {
            t.columns()
                .iter()
                .take_while(|c| r < c.len())
                .map(|c| c[r])
                .collect()
        })
        .collect();
    Ssyt::new(rows).expect("semistandard column tableau")
}

/// All exchange tableaux `E^B_C(T)` for `C` = the boxes of column `j` at
/// the given rows (1-based) and `B` ranging over equally large subsets of
/// column `i`. Contents are swapped preserving vertical order; the results
/// are raw fillings, not yet normalized.
pub fn exchange_set(
    t: &ColumnTableau,
    i: usize,
    j: usize,
    c_rows: &[usize],
) -> Vec<ColumnTableau> {
    assert_ne!(i, j);
    let col_i = &t.columns()[i - 1];
    let col_j = &t.columns()[j - 1];
    let k = c_rows.len();
    assert!(k <= col_i.len(), "|C| may not exceed the source column");
    let c_entries: Vec<usize> = c_rows.iter().map(|&r| col_j[r - 1]).collect();
    let mut out = Vec::new();
    for b_rows in subsets(col_i.len(), k) {
        let mut cols = t.columns().to_vec();
        for (slot, &r) in b_rows.iter().enumerate() {
            cols[i - 1][r - 1] = c_entries[slot];
        }
        for (slot, &r) in c_rows.iter().enumerate() {
            cols[j - 1][r - 1] = col_i[b_rows[slot] - 1];
        }
        out.push(ColumnTableau::from_columns_unchecked(cols));
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..=n {
            cur.push(e);
            rec(n, k, e + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut Vec::new(), &mut out);
    out
}

/// Memoizing straightener. The cache maps canonical (column-sorted)
/// tableaux to their semistandard expansions; results are identical across
/// caches, so per-thread instances are fine.
#[derive(Default)]
pub struct Straightener {
    cache: HashMap<ColumnTableau, SchurVector>,
}

impl Straightener {
    pub fn new() -> Straightener {
        Straightener::default()
    }

    /// Rewrites a vector of column shape `λ*` into the semistandard basis
    /// of `S^λ`. Linear, idempotent on semistandard inputs.
    pub fn straighten(&mut self, v: &XVector) -> SchurVector {
        let shape = partition_shape(v.shape());
        let mut out = SchurVector::zero(shape);
        for (t, c) in v.terms() {
            let s = self.straighten_tableau(&t.clone().trim());
            out.add_scaled(&s, c);
        }
        out
    }

    /// Straightens one canonical tableau (columns sorted, no duplicates).
    pub fn straighten_tableau(&mut self, t: &ColumnTableau) -> SchurVector {
        if let Some(cached) = self.cache.get(t) {
            return cached.clone();
        }
        let result = if t.is_semistandard() {
            SchurVector::basis(columns_to_ssyt(t))
        } else {
            let (j, r) = first_violation(t).expect("non-semistandard tableau has a violation");
            // Plücker relation with i = j and C = the top r boxes of
            // column j+1: T = Σ_B E^B_C(T).
            let c_rows: Vec<usize> = (1..=r).collect();
            let word = reversed_column_word(t);
            let mut acc = SchurVector::zero(partition_shape(&t.shape()));
            for e in exchange_set(t, j, j + 1, &c_rows) {
                if let Some((sign, norm)) = normalize_filling(e.columns().to_vec()) {
                    // Exchanges preserve the entry multiset and strictly
                    // increase the reversed column word, so the recursion
                    // is well-founded.
                    assert!(
                        reversed_column_word(&norm) > word,
                        "straightening step did not progress: {t:?} -> {norm:?}"
                    );
                    let sub = self.straighten_tableau(&norm);
                    let c = if sign < 0 {
                        -BigRational::one()
                    } else {
                        BigRational::one()
                    };
                    acc.add_scaled(&sub, &c);
                }
            }
            acc
        };
        self.cache.insert(t.clone(), result.clone());
        result
    }
}

/// Columns right to left, each bottom to top.
fn reversed_column_word(t: &ColumnTableau) -> Vec<usize> {
    t.columns().iter().flatten().rev().copied().collect()
}

fn partition_shape(column_lengths: &[usize]) -> Partition {
    let mut lens = column_lengths.to_vec();
    while lens.last() == Some(&0) {
        lens.pop();
    }
    Partition::new(lens)
        .expect("column lengths must weakly decrease")
        .conjugate()
}

/// Leftmost adjacent column pair `(j, j+1)` and topmost row `r` (1-based)
/// with `T[r][j] > T[r][j+1]`.
fn first_violation(t: &ColumnTableau) -> Option<(usize, usize)> {
    for j in 1..t.columns().len() {
        let left = &t.columns()[j - 1];
        let right = &t.columns()[j];
        for r in 1..=right.len() {
            if left[r - 1] > right[r - 1] {
                return Some((j, r));
            }
        }
    }
    None
}
