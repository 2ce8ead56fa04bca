//! Partition and tableau combinatorics: conjugation, horizontal strips,
//! box removal/addition chains, hook products and semistandard tableau
//! enumeration.
//!
//! Column indices, row indices and tableau entries are all 1-based
//! throughout the crate.

use num::BigInt;

use crate::Error;

/// A list of column lengths. Unlike [`Partition`] the entries need not be
/// weakly decreasing and zeros are allowed.
pub type Composition = Vec<usize>;

/// A box position `(row, col)` inside a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// A partition: a weakly decreasing list of positive integers, identified
/// with its Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Partition, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (1-based); zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Number of rows of the diagram.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition: `conjugate(λ)[j] = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Column lengths as a composition, one entry per column.
    pub fn column_lengths(&self) -> Composition {
        self.conjugate().parts
    }

    /// Whether `inner` fits inside `self` box-wise.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// The boxes of `self/inner`, sorted by column. Assumes containment.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<Cell> {
        let mut cells = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in inner.part(i + 1) + 1..=p {
                cells.push(Cell { row: i + 1, col: j });
            }
        }
        cells.sort_by_key(|c| (c.col, c.row));
        cells
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// True iff `inner ⊆ outer` and `outer/inner` has at most one box per column.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    // At most one box per column means row i of outer fits over row i-1 of inner.
    (1..=outer.rows()).all(|i| i == 1 || outer.part(i) <= inner.part(i - 1))
}

/// The hook product `D_J` for a box path `J` ending at column `k`:
/// the product of the hook lengths `λ*_k − λ*_{J_q} + J_q − k + 1` over the
/// interior entries of `J`. Empty interior gives 1.
pub fn hook_product(lambda_star: &[usize], k: usize, path: &[usize]) -> BigInt {
    let col = |j: usize| -> i64 {
        if j >= 1 && j <= lambda_star.len() {
            lambda_star[j - 1] as i64
        } else {
            0
        }
    };
    let mut d = BigInt::from(1);
    if path.len() > 2 {
        for &j in &path[1..path.len() - 1] {
            d *= BigInt::from(col(k) - col(j) + j as i64 - k as i64 + 1);
        }
    }
    d
}

/// Removes the last box of each listed row in order, validating that every
/// intermediate shape is still a partition.
pub fn remove_boxes(mu: &Partition, rows: &[usize]) -> Result<Partition, Error> {
    let mut parts = mu.parts().to_vec();
    for &r in rows {
        if r == 0 || r > parts.len() || parts[r - 1] == 0 {
            return Err(Error::InvalidRemoval(format!(
                "row {r} of {:?} has no box to remove",
                parts
            )));
        }
        parts[r - 1] -= 1;
        if r < parts.len() && parts[r - 1] < parts[r] {
            return Err(Error::InvalidRemoval(format!(
                "removing a box in row {r} leaves the non-partition {:?}",
                parts
            )));
        }
    }
    Partition::new(parts)
}

/// The chain `λ = λ^(0) ⊂ … ⊂ λ^(d) = μ` adding the strip boxes left to
/// right, together with the column index of each added box.
pub fn box_addition_chain(
    lam: &Partition,
    mu: &Partition,
) -> Result<(Vec<Partition>, Vec<usize>), Error> {
    if !is_horizontal_strip(lam, mu) {
        return Err(Error::NotAStrip(format!("{mu}/{lam}")));
    }
    let cells = mu.skew_cells(lam);
    let mut chain = vec![lam.clone()];
    let mut cols = Vec::new();
    for cell in &cells {
        let mut parts = chain.last().unwrap().parts().to_vec();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        chain.push(Partition::new(parts)?);
        cols.push(cell.col);
    }
    Ok((chain, cols))
}

/// A semistandard Young tableau: rows weakly increase left to right,
/// columns strictly increase top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ssyt {
    rows: Vec<Vec<usize>>,
}

impl Ssyt {
    /// Builds a tableau from its rows, checking semistandardness.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Ssyt, Error> {
        let t = Ssyt { rows };
        if !t.shape_ok() {
            return Err(Error::ShapeError(format!("{:?} is not a diagram", t.rows)));
        }
        if !t.is_semistandard() {
            return Err(Error::ShapeError(format!("{:?} is not semistandard", t.rows)));
        }
        Ok(t)
    }

    fn shape_ok(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[0].len() >= w[1].len() && !w[1].is_empty())
            && self.rows.iter().all(|r| !r.is_empty())
    }

    fn is_semistandard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&e| e >= 1));
        let cols_ok = self.rows.windows(2).all(|w| {
            w[1].iter().enumerate().all(|(j, &e)| w[0][j] < e)
        });
        rows_ok && cols_ok
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).unwrap()
    }

    /// Entry at `(row, col)`, 1-based.
    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.rows[row - 1][col - 1]
    }

    /// The column reading word: columns left to right, each top to bottom.
    pub fn column_word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.rows.iter().map(|r| r.len()).sum());
        let cols = self.rows.first().map_or(0, |r| r.len());
        for j in 0..cols {
            for r in &self.rows {
                if j < r.len() {
                    w.push(r[j]);
                }
            }
        }
        w
    }
}

// Tableaux of a common shape are ordered by their column reading word.
impl Ord for Ssyt {
    fn cmp(&self, other: &Ssyt) -> std::cmp::Ordering {
        self.column_word()
            .cmp(&other.column_word())
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl PartialOrd for Ssyt {
    fn partial_cmp(&self, other: &Ssyt) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Ssyt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// All semistandard tableaux of shape `lam` with entries in `1..=n`, sorted
/// ascending by column reading word.
pub fn enumerate_ssyt(lam: &Partition, n: usize) -> Vec<Ssyt> {
    let shape = lam.parts().to_vec();
    if shape.is_empty() {
        return vec![Ssyt { rows: Vec::new() }];
    }
    if lam.conjugate().part(1) > n {
        return Vec::new();
    }
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fill(&mut rows, &shape, 0, 0, n, &mut out);
    out.sort();
    out
}

fn fill(
    rows: &mut Vec<Vec<usize>>,
    shape: &[usize],
    r: usize,
    c: usize,
    n: usize,
    out: &mut Vec<Ssyt>,
) {
    if r == shape.len() {
        out.push(Ssyt { rows: rows.clone() });
        return;
    }
    if c == shape[r] {
        fill(rows, shape, r + 1, 0, n, out);
        return;
    }
    let lo = {
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        left.max(above)
    };
    for e in lo..=n {
        rows[r][c] = e;
        fill(rows, shape, r, c + 1, n, out);
    }
    rows[r][c] = 0;
}

/// Dimension of the Schur module `S^λ(C^n)` by the hook content formula.
/// Cross-checks `enumerate_ssyt`.
pub fn dim_schur(lam: &Partition, n: usize) -> usize {
    use num::{BigRational, ToPrimitive};
    if lam.rows() > n {
        return 0;
    }
    let parts = lam.parts();
    let conj = lam.conjugate();
    let mut dim = BigRational::from(BigInt::from(1));
    for (i0, &len) in parts.iter().enumerate() {
        let i = i0 + 1;
        for j in 1..=len {
            let content = n as i64 + j as i64 - i as i64;
            let hook = (len - j) + (conj.part(j) - i) + 1;
            dim *= BigRational::new(BigInt::from(content), BigInt::from(hook as i64));
        }
    }
    dim.to_integer().to_usize().expect("dimension overflow")
}
