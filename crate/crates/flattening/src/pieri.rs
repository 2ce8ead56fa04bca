//! Pieri maps: the single-box inclusion `ζ` as a hook-weighted sum of
//! box-moving paths, the horizontal-strip composition `ψ`, and the
//! semistandard witness tableau certifying nonzeroness.

use num::BigRational;

use crate::exterior::{decreasing_sequences, sigma_path, ColumnTableau, XVector};
use crate::shapes::{box_addition_chain, hook_product, is_horizontal_strip, Partition, Ssyt};
use crate::straighten::{ssyt_to_columns, SchurVector, Straightener};
use crate::Error;

/// A validated horizontal-strip Pieri problem: the box-addition chain from
/// `λ` to `μ` and the column index targeted at each step.
#[derive(Clone, Debug)]
pub struct PieriProblem {
    lam: Partition,
    mu: Partition,
    n: usize,
    chain: Vec<Partition>,
    target_columns: Vec<usize>,
}

impl PieriProblem {
    /// Builds the problem with the canonical left-to-right box order.
    pub fn new(lam: Partition, mu: Partition, n: usize) -> Result<PieriProblem, Error> {
        let (chain, target_columns) = box_addition_chain(&lam, &mu)?;
        Self::validated(lam, mu, n, chain, target_columns)
    }

    /// Builds the problem with a caller-chosen admissible box order, given
    /// as a permutation of the strip cells (indices into the
    /// column-sorted cell list). Every intermediate shape must be a
    /// partition.
    pub fn with_box_order(
        lam: Partition,
        mu: Partition,
        n: usize,
        order: &[usize],
    ) -> Result<PieriProblem, Error> {
        if !is_horizontal_strip(&lam, &mu) {
            return Err(Error::NotAStrip(format!("{mu}/{lam}")));
        }
        let cells = mu.skew_cells(&lam);
        if order.len() != cells.len() {
            return Err(Error::DegreeMismatch(format!(
                "order of length {} for {} strip boxes",
                order.len(),
                cells.len()
            )));
        }
        let mut chain = vec![lam.clone()];
        let mut target_columns = Vec::new();
        for &idx in order {
            let cell = cells
                .get(idx)
                .ok_or_else(|| Error::ShapeError(format!("cell index {idx} out of range")))?;
            let prev = chain.last().unwrap();
            let mut parts = prev.parts().to_vec();
            if cell.row == parts.len() + 1 {
                parts.push(1);
            } else if cell.row <= parts.len() {
                parts[cell.row - 1] += 1;
            } else {
                return Err(Error::ShapeError(format!("box order skips row {}", cell.row)));
            }
            let next = Partition::new(parts)
                .map_err(|_| Error::ShapeError(format!("box order {order:?} is not admissible")))?;
            if next.part(cell.row) != cell.col {
                return Err(Error::ShapeError(format!("box order {order:?} is not admissible")));
            }
            chain.push(next);
            target_columns.push(cell.col);
        }
        Self::validated(lam, mu, n, chain, target_columns)
    }

    fn validated(
        lam: Partition,
        mu: Partition,
        n: usize,
        chain: Vec<Partition>,
        target_columns: Vec<usize>,
    ) -> Result<PieriProblem, Error> {
        if mu.rows() > n {
            return Err(Error::ShapeError(format!(
                "{mu} has more than {n} rows; the target module is zero"
            )));
        }
        Ok(PieriProblem {
            lam,
            mu,
            n,
            chain,
            target_columns,
        })
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of strip boxes `d = |μ| − |λ|`.
    pub fn degree(&self) -> usize {
        self.target_columns.len()
    }
}

/// The single-box Pieri map: adds a box with entry `w` to column `k` of
/// every tableau of `t`, as the hook-weighted sum `Σ_J σ_J / D_J` over all
/// decreasing paths from the virtual column `λ_1 + 1` down to `k`, then
/// straightens into the enlarged semistandard basis.
pub fn zeta(
    lam: &Partition,
    k: usize,
    w: usize,
    t: &SchurVector,
    straightener: &mut Straightener,
) -> Result<SchurVector, Error> {
    debug_assert_eq!(t.shape(), lam);
    let lam_star = lam.column_lengths();
    let enlarged = add_box_in_column(lam, k)?;
    let m = lam.part(1) + 1;
    let mut out = SchurVector::zero(enlarged);
    for (tab, coeff) in t.terms() {
        let lifted = lift_with_virtual_column(tab, m, w);
        for path in decreasing_sequences(m, k) {
            let d = hook_product(&lam_star, k, &path);
            let moved = sigma_path(&path, &lifted);
            if moved.is_zero() {
                continue;
            }
            let straightened = straightener.straighten(&moved);
            let c = coeff / BigRational::from_integer(d);
            out.add_scaled(&straightened, &c);
        }
    }
    Ok(out)
}

/// `λ` plus one box at the bottom of column `k`; fails when the result is
/// not a partition.
fn add_box_in_column(lam: &Partition, k: usize) -> Result<Partition, Error> {
    let row = lam.column_lengths().get(k - 1).copied().unwrap_or(0) + 1;
    if k > 1 && lam.part(row) < k - 1 {
        return Err(Error::ShapeError(format!(
            "cannot add a box in column {k} of {lam}"
        )));
    }
    let mut parts = lam.parts().to_vec();
    if row > parts.len() {
        parts.push(1);
    } else {
        parts[row - 1] += 1;
    }
    Partition::new(parts)
}

/// Column form of an `Ssyt` with a virtual single-entry column at index `m`.
fn lift_with_virtual_column(t: &Ssyt, m: usize, w: usize) -> XVector {
    let base = ssyt_to_columns(t);
    let mut cols = base.columns().to_vec();
    while cols.len() < m - 1 {
        cols.push(Vec::new());
    }
    cols.push(vec![w]);
    XVector::basis(ColumnTableau::new(cols))
}

/// The composed Pieri map: applies `zeta` once per strip box along the
/// problem's chain, consuming the last letter of `word` first.
pub fn psi(
    problem: &PieriProblem,
    word: &[usize],
    t: &SchurVector,
    straightener: &mut Straightener,
) -> Result<SchurVector, Error> {
    let d = problem.degree();
    if word.len() != d {
        return Err(Error::DegreeMismatch(format!(
            "word of length {} for {d} strip boxes",
            word.len()
        )));
    }
    let mut cur = t.clone();
    for step in 0..d {
        if cur.is_zero() {
            return Ok(SchurVector::zero(problem.mu.clone()));
        }
        let w = word[d - 1 - step];
        cur = zeta(
            &problem.chain[step],
            problem.target_columns[step],
            w,
            &cur,
            straightener,
        )?;
    }
    Ok(cur)
}

/// The witness tableau `Z^λ`: each box in row `i` carries entry `i + 1`,
/// except that full-height columns (`n` boxes) carry `1, 2, …, n`.
pub fn z_witness(lam: &Partition, n: usize) -> Result<Ssyt, Error> {
    let full_cols = lam
        .parts()
        .get(n.wrapping_sub(1))
        .copied()
        .unwrap_or(0);
    if lam.rows() > n {
        return Err(Error::ShapeError(format!("{lam} has more than {n} rows")));
    }
    let rows: Vec<Vec<usize>> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i0, &len)| {
            (1..=len)
                .map(|j| if j <= full_cols { i0 + 1 } else { i0 + 2 })
                .collect()
        })
        .collect();
    Ssyt::new(rows)
}
