//! The `GL(V)` action: substitution on polynomials and the representing
//! matrix of `g` on a Schur module in the semistandard basis, used as an
//! equivariance cross-check on flattening matrices.

use num::{BigRational, One, Zero};

use crate::exactla::RationalMatrix;
use crate::exterior::{normalize_filling, XVector};
use crate::polyio::Polynomial;
use crate::shapes::{enumerate_ssyt, Partition};
use crate::straighten::{ssyt_to_columns, SchurVector, Straightener};

/// Applies `g` to a polynomial by the substitution `x_i ↦ Σ_j g_{ji} x_j`.
pub fn act_poly(g: &RationalMatrix, p: &Polynomial) -> Polynomial {
    let n = p.nvars();
    assert_eq!((g.rows(), g.cols()), (n, n), "matrix must be {n}x{n}");
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut li = Polynomial::zero(n);
            for j in 0..n {
                let mut alpha = vec![0; n];
                alpha[j] = 1;
                li.add_term(alpha, g.get(j, i).clone());
            }
            li
        })
        .collect();
    let mut out = Polynomial::zero(n);
    for (alpha, c) in p.terms() {
        let mut term = Polynomial::zero(n);
        term.add_term(vec![0; n], c.clone());
        for (i, &e) in alpha.iter().enumerate() {
            for _ in 0..e {
                term = term.mul(&images[i]);
            }
        }
        out = out.add(&term);
    }
    out
}

/// The matrix of `g` acting on `S^λ(C^n)` in the sorted semistandard basis:
/// column `s` holds the coordinates of the image of the `s`-th basis
/// tableau, obtained by substituting into every box, renormalizing each
/// column filling, and straightening.
pub fn rep_matrix(
    lam: &Partition,
    n: usize,
    g: &RationalMatrix,
    straightener: &mut Straightener,
) -> RationalMatrix {
    assert_eq!((g.rows(), g.cols()), (n, n), "matrix must be {n}x{n}");
    let basis = enumerate_ssyt(lam, n);
    let index: std::collections::BTreeMap<_, _> = basis
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let dim = basis.len();
    let mut out = RationalMatrix::zero(dim, dim);
    for (s, tab) in basis.iter().enumerate() {
        let cols = ssyt_to_columns(tab);
        // Multilinear expansion over all boxes: each entry e becomes
        // Σ_j g_{j,e} e_j. Walk the boxes in column order, carrying the
        // partially substituted fillings with their coefficients.
        let mut fillings: Vec<(BigRational, Vec<Vec<usize>>)> = vec![(
            BigRational::one(),
            cols.columns().iter().map(|c| vec![0; c.len()]).collect(),
        )];
        for (ci, col) in cols.columns().iter().enumerate() {
            for (ri, &entry) in col.iter().enumerate() {
                let mut next = Vec::with_capacity(fillings.len() * n);
                for (coeff, filling) in &fillings {
                    for j in 1..=n {
                        let gje = g.get(j - 1, entry - 1);
                        if gje.is_zero() {
                            continue;
                        }
                        let mut f = filling.clone();
                        f[ci][ri] = j;
                        next.push((coeff * gje, f));
                    }
                }
                fillings = next;
            }
        }
        let mut image = SchurVector::zero(lam.clone());
        let mut raw = XVector::zero(lam.column_lengths());
        for (coeff, filling) in fillings {
            if let Some((sign, norm)) = normalize_filling(filling) {
                let c = if sign < 0 { -coeff } else { coeff };
                raw.add_term(norm, c);
            }
        }
        image.add_scaled(&straightener.straighten(&raw), &BigRational::one());
        for (t, c) in image.terms() {
            out.set(index[t], s, c.clone());
        }
    }
    out
}
