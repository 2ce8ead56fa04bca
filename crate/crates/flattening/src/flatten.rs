//! Flattening matrices: the map `F_{λ,μ}(p)` assembled column by column in
//! the semistandard bases, the naive box-filling variant, and the Waring
//! rank lower bound derived from exact ranks.

use num::{BigInt, BigRational, ToPrimitive};
use std::collections::BTreeMap;

use crate::exactla::RationalMatrix;
use crate::pieri::{psi, PieriProblem};
use crate::polyio::Polynomial;
use crate::shapes::{enumerate_ssyt, Partition, Ssyt};
use crate::straighten::{SchurVector, Straightener};
use crate::Error;

/// A flattening matrix together with the ordered bases indexing it: rows
/// run over the semistandard tableaux of `μ`, columns over those of `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatteningMatrix {
    row_basis: Vec<Ssyt>,
    col_basis: Vec<Ssyt>,
    matrix: RationalMatrix,
}

impl FlatteningMatrix {
    pub fn row_basis(&self) -> &[Ssyt] {
        &self.row_basis
    }

    pub fn col_basis(&self) -> &[Ssyt] {
        &self.col_basis
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// The full symmetrization of the monomial `x^α` as a list of
/// `(coefficient, variable word)` pairs: `∏ α_i!` times each distinct
/// arrangement of the multiset word, which equals the sum over all `d!`
/// orderings.
pub fn embed_symmetric(alpha: &[usize], d: usize) -> Vec<(BigInt, Vec<usize>)> {
    assert_eq!(alpha.iter().sum::<usize>(), d);
    let mut coeff = BigInt::from(1);
    let mut word = Vec::with_capacity(d);
    for (i, &e) in alpha.iter().enumerate() {
        for _ in 0..e {
            word.push(i + 1);
        }
        for f in 1..=e {
            coeff *= BigInt::from(f);
        }
    }
    distinct_permutations(word)
        .into_iter()
        .map(|w| (coeff.clone(), w))
        .collect()
}

/// All distinct rearrangements of a sorted multiset word, in
/// lexicographic order.
fn distinct_permutations(sorted: Vec<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut w = sorted;
    loop {
        out.push(w.clone());
        // next lexicographic permutation
        let Some(i) = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1]) else {
            return out;
        };
        let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
        w.swap(i, j);
        w[i + 1..].reverse();
    }
}

fn check_inputs(lam: &Partition, mu: &Partition, p: &Polynomial, n: usize) -> Result<usize, Error> {
    let d = mu.size() - lam.size();
    if !p.is_zero() && p.degree() != d {
        return Err(Error::DegreeMismatch(format!(
            "polynomial of degree {} for a strip of {d} boxes",
            p.degree()
        )));
    }
    if mu.rows() > n {
        return Err(Error::ShapeError(format!(
            "{mu} has more than {n} rows; the target module is zero"
        )));
    }
    Ok(d)
}

/// The image of one column-basis tableau under `F_{λ,μ}(p)`.
fn flatten_column(
    problem: &PieriProblem,
    p: &Polynomial,
    tab: &Ssyt,
    straightener: &mut Straightener,
) -> Result<SchurVector, Error> {
    let d = problem.degree();
    let mut out = SchurVector::zero(problem.mu().clone());
    let src = SchurVector::basis(tab.clone());
    for (alpha, c_alpha) in p.terms() {
        for (c, word) in embed_symmetric(alpha, d) {
            let image = psi(problem, &word, &src, straightener)?;
            out.add_scaled(&image, &(c_alpha * BigRational::from_integer(c)));
        }
    }
    Ok(out)
}

/// Builds `F_{λ,μ}(p)` column by column on a single thread.
pub fn flattening_matrix(
    lam: &Partition,
    mu: &Partition,
    p: &Polynomial,
    n: usize,
) -> Result<FlatteningMatrix, Error> {
    flattening_matrix_threaded(lam, mu, p, n, 1)
}

/// Builds `F_{λ,μ}(p)` with the basis columns distributed over `threads`
/// worker threads, each with its own straightening cache. The result is
/// identical to the single-threaded build.
pub fn flattening_matrix_threaded(
    lam: &Partition,
    mu: &Partition,
    p: &Polynomial,
    n: usize,
    threads: usize,
) -> Result<FlatteningMatrix, Error> {
    check_inputs(lam, mu, p, n)?;
    let problem = PieriProblem::new(lam.clone(), mu.clone(), n)?;
    let col_basis = enumerate_ssyt(lam, n);
    let row_basis = enumerate_ssyt(mu, n);
    let row_index: BTreeMap<&Ssyt, usize> =
        row_basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let threads = threads.max(1).min(col_basis.len().max(1));

    let columns: Vec<Result<SchurVector, Error>> = if threads <= 1 {
        let mut straightener = Straightener::new();
        col_basis
            .iter()
            .map(|t| flatten_column(&problem, p, t, &mut straightener))
            .collect()
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let chunks: Vec<Vec<(usize, Result<SchurVector, Error>)>> =
            std::thread::scope(|scope| {
                let handles: Vec<_> = (0..threads)
                    .map(|_| {
                        scope.spawn(|| {
                            let mut straightener = Straightener::new();
                            let mut done = Vec::new();
                            loop {
                                let i =
                                    next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                                if i >= col_basis.len() {
                                    return done;
                                }
                                let r = flatten_column(
                                    &problem,
                                    p,
                                    &col_basis[i],
                                    &mut straightener,
                                );
                                done.push((i, r));
                            }
                        })
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().unwrap()).collect()
            });
        let mut slots: Vec<Option<Result<SchurVector, Error>>> = vec![None; col_basis.len()];
        for (i, r) in chunks.into_iter().flatten() {
            slots[i] = Some(r);
        }
        slots.into_iter().map(Option::unwrap).collect()
    };

    let mut matrix = RationalMatrix::zero(row_basis.len(), col_basis.len());
    for (j, column) in columns.into_iter().enumerate() {
        for (t, c) in column?.terms() {
            matrix.set(row_index[t], j, c.clone());
        }
    }
    Ok(FlatteningMatrix {
        row_basis,
        col_basis,
        matrix,
    })
}

/// The naive box-filling variant: for each monomial `x^α` and basis
/// tableau `T`, sum the straightenings of every shape-`μ` filling obtained
/// by writing the letters of `x^α` into the strip cells, over all distinct
/// letter placements. Not equivariant; kept as a negative control.
pub fn boxfill_matrix(
    lam: &Partition,
    mu: &Partition,
    p: &Polynomial,
    n: usize,
) -> Result<FlatteningMatrix, Error> {
    let d = check_inputs(lam, mu, p, n)?;
    // validates the strip
    PieriProblem::new(lam.clone(), mu.clone(), n)?;
    let cells = mu.skew_cells(lam);
    let col_basis = enumerate_ssyt(lam, n);
    let row_basis = enumerate_ssyt(mu, n);
    let row_index: BTreeMap<&Ssyt, usize> =
        row_basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut matrix = RationalMatrix::zero(row_basis.len(), col_basis.len());
    let mut straightener = Straightener::new();
    for (j, tab) in col_basis.iter().enumerate() {
        let mut image = SchurVector::zero(mu.clone());
        for (alpha, c_alpha) in p.terms() {
            let mut word = Vec::with_capacity(d);
            for (i, &e) in alpha.iter().enumerate() {
                word.extend(std::iter::repeat_n(i + 1, e));
            }
            for placement in distinct_permutations(word.clone()) {
                // write the letters into the strip cells of a shape-μ filling
                let mut rows: Vec<Vec<usize>> = tab.rows().to_vec();
                rows.resize(mu.rows(), Vec::new());
                for (cell, &letter) in cells.iter().zip(&placement) {
                    rows[cell.row - 1].push(letter);
                }
                let columns: Vec<Vec<usize>> = (0..mu.part(1))
                    .map(|c| rows.iter().filter_map(|r| r.get(c).copied()).collect())
                    .collect();
                if let Some((sign, norm)) = crate::exterior::normalize_filling(columns) {
                    let sub = straightener.straighten_tableau(&norm);
                    let c = c_alpha * BigRational::from_integer(sign.into());
                    image.add_scaled(&sub, &c);
                }
            }
        }
        for (t, c) in image.terms() {
            matrix.set(row_index[t], j, c.clone());
        }
    }
    Ok(FlatteningMatrix {
        row_basis,
        col_basis,
        matrix,
    })
}

/// The border Waring rank lower bound `⌈rank F(p) / rank F(x^d)⌉` for the
/// given comparison variable `x`.
pub fn waring_bound(
    lam: &Partition,
    mu: &Partition,
    p: &Polynomial,
    x: usize,
    n: usize,
) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::DegenerateInput(
            "the zero polynomial has no rank bound".to_string(),
        ));
    }
    let d = check_inputs(lam, mu, p, n)?;
    let rank_p = flattening_matrix(lam, mu, p, n)?.rank();
    let power = Polynomial::power_of_variable(p.nvars(), x, d);
    let rank_x = flattening_matrix(lam, mu, &power, n)?.rank();
    assert!(rank_x > 0, "rank of the power flattening must be positive");
    Ok(rank_p.div_ceil(rank_x))
}

/// Convenience wrapper: recovers `f64` timings-friendly rank quotients in
/// tests without exposing `BigRational` internals.
#[doc(hidden)]
pub fn rank_quotient(rank_p: usize, rank_x: usize) -> f64 {
    BigRational::new(BigInt::from(rank_p), BigInt::from(rank_x))
        .to_f64()
        .unwrap_or(f64::NAN)
}
