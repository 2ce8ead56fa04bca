//! Column tableaux with wedge-product sign conventions and the box-moving
//! operators `σ_{i,j}`.
//!
//! A column tableau represents a basis vector of
//! `⋀^{ν_1}V ⊗ … ⊗ ⋀^{ν_ℓ}V`: each column is a strictly increasing list of
//! entries, read top to bottom. Concatenating the columns left to right
//! gives the "long wedge" word; all signs are transposition counts in that
//! word. `σ_{i,j}` moves one box from column `i` to column `j`, summed over
//! the slots of column `i`.

use std::collections::BTreeMap;

use num::{BigRational, Zero};

use crate::shapes::Composition;

/// A basis vector of the column-wedge space: columns strictly increasing.
///
/// The canonical form is produced by [`normalize_filling`]; constructing a
/// tableau by hand requires already-sorted, duplicate-free columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColumnTableau {
    columns: Vec<Vec<usize>>,
}

impl ColumnTableau {
    /// Wraps sorted duplicate-free columns. Panics on unsorted input; use
    /// [`normalize_filling`] for arbitrary fillings.
    pub fn new(columns: Vec<Vec<usize>>) -> ColumnTableau {
        for col in &columns {
            assert!(
                col.windows(2).all(|w| w[0] < w[1]),
                "column {col:?} is not strictly increasing"
            );
        }
        ColumnTableau { columns }
    }

    /// Wraps columns without the sortedness check, for transient fillings
    /// that go through [`normalize_filling`] before use.
    pub(crate) fn from_columns_unchecked(columns: Vec<Vec<usize>>) -> ColumnTableau {
        ColumnTableau { columns }
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Column lengths.
    pub fn shape(&self) -> Composition {
        self.columns.iter().map(|c| c.len()).collect()
    }

    /// Drops empty columns at the right end.
    pub fn trim(mut self) -> ColumnTableau {
        while self.columns.last().is_some_and(|c| c.is_empty()) {
            self.columns.pop();
        }
        self
    }

    /// Rows weakly increase left to right. Meaningful when the column
    /// lengths weakly decrease, i.e. the shape is a partition conjugate.
    pub fn is_semistandard(&self) -> bool {
        self.columns.windows(2).all(|w| {
            w[1].len() <= w[0].len() && w[1].iter().enumerate().all(|(r, &e)| w[0][r] <= e)
        })
    }
}

/// Sorts every column, tracking the Grassmann sign. Returns `None` when a
/// column has a repeated entry (the vector is zero).
pub fn normalize_filling(mut columns: Vec<Vec<usize>>) -> Option<(i8, ColumnTableau)> {
    let mut sign = 1i8;
    for col in &mut columns {
        sign *= sort_count_sign(col)?;
    }
    Some((sign, ColumnTableau { columns }))
}

/// Insertion sort; returns the sign of the sorting permutation, or `None`
/// on a duplicate entry.
fn sort_count_sign(col: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..col.len() {
        let mut j = i;
        while j > 0 && col[j - 1] >= col[j] {
            if col[j - 1] == col[j] {
                return None;
            }
            col.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    Some(sign)
}

/// A formal rational combination of column tableaux of one shape.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XVector {
    shape: Composition,
    terms: BTreeMap<ColumnTableau, BigRational>,
}

impl XVector {
    pub fn zero(shape: Composition) -> XVector {
        XVector {
            shape,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis tableau with coefficient 1.
    pub fn basis(t: ColumnTableau) -> XVector {
        let mut v = XVector::zero(t.shape());
        v.add_term(t, BigRational::from_integer(1.into()));
        v
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn terms(&self) -> &BTreeMap<ColumnTableau, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t: ColumnTableau, c: BigRational) {
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

    pub fn add(&mut self, other: &XVector) {
        debug_assert_eq!(self.shape, other.shape);
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c.clone());
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

/// All strictly decreasing sequences from `m` down to `k`, ordered
/// deterministically. `A^m_m = {(m)}`; for `k < m` there are `2^(m−k−1)`.
pub fn decreasing_sequences(m: usize, k: usize) -> Vec<Vec<usize>> {
    assert!(k <= m, "need k <= m");
    if m == k {
        return vec![vec![m]];
    }
    let interior: Vec<usize> = (k + 1..m).rev().collect();
    let mut out = Vec::with_capacity(1 << interior.len());
    for mask in 0..(1u64 << interior.len()) {
        let mut seq = vec![m];
        for (idx, &c) in interior.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                seq.push(c);
            }
        }
        seq.push(k);
        out.push(seq);
    }
    out.sort();
    out
}

/// Applies `σ_{i,j}` to a single basis tableau: for every slot of column
/// `i`, move that entry to column `j` and record the long-wedge sign.
/// Returns the signed normalized summands.
fn sigma_term(i: usize, j: usize, t: &ColumnTableau, width: usize) -> Vec<(i8, ColumnTableau)> {
    let mut cols = t.columns().to_vec();
    while cols.len() < width {
        cols.push(Vec::new());
    }
    let src_len = cols[i - 1].len();
    let mut out = Vec::new();
    for a in 1..=src_len {
        let mut moved = cols.clone();
        let entry = moved[i - 1].remove(a - 1);
        // Count the boxes strictly between the removed slot and the
        // insertion slot in long-wedge order.
        let between: usize = if j > i {
            // insert at the front of column j
            (src_len - a) + (i + 1..j).map(|c| moved[c - 1].len()).sum::<usize>()
        } else {
            // insert at the end of column j
            (a - 1) + (j + 1..i).map(|c| moved[c - 1].len()).sum::<usize>()
        };
        if j > i {
            moved[j - 1].insert(0, entry);
        } else {
            moved[j - 1].push(entry);
        }
        let sign = if between.is_multiple_of(2) { 1 } else { -1 };
        if let Some((norm_sign, norm)) = normalize_filling(moved) {
            out.push((sign * norm_sign, norm));
        }
    }
    out
}

/// The operator `σ_{i,j}` on a whole vector. Columns are 1-based; the
/// result has shape `ν − e_i + e_j` (zero when column `i` is empty).
pub fn sigma(i: usize, j: usize, v: &XVector) -> XVector {
    assert_ne!(i, j);
    let width = v.shape().len().max(i).max(j);
    let mut shape = v.shape().clone();
    shape.resize(width, 0);
    if shape[i - 1] > 0 {
        shape[i - 1] -= 1;
        shape[j - 1] += 1;
    }
    let mut out = XVector::zero(shape);
    if v.shape().len() < i || v.shape()[i - 1] == 0 {
        return out;
    }
    for (t, c) in v.terms() {
        for (sign, s) in sigma_term(i, j, t, width) {
            let mut coeff = c.clone();
            if sign < 0 {
                coeff = -coeff;
            }
            out.add_term(s, coeff);
        }
    }
    out
}

/// `σ_J = σ_{J_1,J_2} ∘ … ∘ σ_{J_{p−1},J_p}`: the rightmost factor acts
/// first, so a box travels from column `J_{p−1}` to `J_p`, then from
/// `J_{p−2}` to `J_{p−1}`, and so on. Identity when `|J| = 1`.
pub fn sigma_path(path: &[usize], v: &XVector) -> XVector {
    debug_assert!(path.windows(2).all(|w| w[0] > w[1]));
    let mut cur = v.clone();
    for w in path.windows(2).rev() {
        if cur.is_zero() {
            break;
        }
        cur = sigma(w[0], w[1], &cur);
    }
    cur
}
