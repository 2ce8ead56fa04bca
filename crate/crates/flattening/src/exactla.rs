//! Exact dense rational matrices: rank by fraction-free integer
//! elimination, proportionality testing, and the shared text format.

use std::io::{BufRead, Write};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::Error;

/// A dense matrix of exact rationals, row-major. Entries are kept in
/// lowest terms by `BigRational` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> RationalMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience for tests: integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&e| BigRational::from_integer(e.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> RationalMatrix {
        let mut out = self.clone();
        for e in out.data.iter_mut() {
            *e *= c;
        }
        out
    }

    /// Gauss-Jordan inverse; `None` for singular matrices.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RationalMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            for c in 0..n {
                a.data.swap(col * n + c, pivot * n + c);
                inv.data.swap(col * n + c, pivot * n + c);
            }
            let p = a.get(col, col).clone();
            for c in 0..n {
                let v = a.get(col, c) / &p;
                a.set(col, c, v);
                let v = inv.get(col, c) / &p;
                inv.set(col, c, v);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for c in 0..n {
                    let v = a.get(r, c) - &f * a.get(col, c);
                    a.set(r, c, v);
                    let v = inv.get(r, c) - &f * inv.get(col, c);
                    inv.set(r, c, v);
                }
            }
        }
        Some(inv)
    }

    /// Exact rank over the rationals.
    ///
    /// Clears denominators row-wise, then runs fraction-free elimination on
    /// sparse integer rows. Pivots are chosen over the whole active
    /// submatrix by a Markowitz fill estimate (smallest pivot-row support,
    /// then smallest magnitude); every updated row is divided by the GCD of
    /// its entries, which removes at least the Bareiss divisor and keeps
    /// coefficient growth polynomial.
    pub fn rank(&self) -> usize {
        // sparse integer rows
        let mut rows: Vec<Vec<(usize, BigInt)>> = Vec::new();
        for r in 0..self.rows {
            let mut lcm = BigInt::one();
            for c in 0..self.cols {
                lcm = lcm.lcm(self.get(r, c).denom());
            }
            let mut row: Vec<(usize, BigInt)> = Vec::new();
            for c in 0..self.cols {
                let e = self.get(r, c);
                if !e.is_zero() {
                    row.push((c, e.numer() * (&lcm / e.denom())));
                }
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }

        let mut col_count = vec![0usize; self.cols];
        for row in &rows {
            for (c, _) in row {
                col_count[*c] += 1;
            }
        }

        let mut rank = 0;
        while !rows.is_empty() {
            // pick the pivot row minimizing (support, pivot column count, magnitude)
            let mut best: Option<(usize, usize)> = None; // (row index, col)
            let mut best_key: Option<(usize, usize, BigInt)> = None;
            for (ri, row) in rows.iter().enumerate() {
                for (c, v) in row {
                    let key = (row.len(), col_count[*c], v.abs());
                    if best_key.as_ref().is_none_or(|k| key < *k) {
                        best_key = Some(key);
                        best = Some((ri, *c));
                    }
                }
            }
            let (pr, pc) = best.unwrap();
            let pivot_row = rows.swap_remove(pr);
            for (c, _) in &pivot_row {
                col_count[*c] -= 1;
            }
            rank += 1;
            let pivot = pivot_row
                .iter()
                .find(|(c, _)| *c == pc)
                .map(|(_, v)| v.clone())
                .unwrap();

            let mut next = Vec::with_capacity(rows.len());
            for row in rows.drain(..) {
                let mult = row.iter().find(|(c, _)| *c == pc).map(|(_, v)| v.clone());
                let Some(mult) = mult else {
                    next.push(row);
                    continue;
                };
                for (c, _) in &row {
                    col_count[*c] -= 1;
                }
                // row <- pivot*row − mult*pivot_row  (column pc cancels)
                let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(row.len());
                let mut gcd = BigInt::zero();
                let (mut i, mut j) = (0, 0);
                while i < row.len() || j < pivot_row.len() {
                    let v = match (row.get(i), pivot_row.get(j)) {
                        (Some((c1, v1)), Some((c2, v2))) if c1 == c2 => {
                            let v = v1 * &pivot - v2 * &mult;
                            i += 1;
                            j += 1;
                            (*c1, v)
                        }
                        (Some((c1, v1)), Some((c2, _))) if c1 < c2 => {
                            i += 1;
                            (*c1, v1 * &pivot)
                        }
                        (Some((c1, v1)), None) => {
                            i += 1;
                            (*c1, v1 * &pivot)
                        }
                        (_, Some((c2, v2))) => {
                            j += 1;
                            (*c2, -(v2 * &mult))
                        }
                        (None, None) => unreachable!(),
                    };
                    if !v.1.is_zero() {
                        gcd = gcd.gcd(&v.1);
                        merged.push(v);
                    }
                }
                if merged.is_empty() {
                    continue;
                }
                if !gcd.is_one() {
                    for (_, v) in merged.iter_mut() {
                        *v /= &gcd;
                    }
                }
                for (c, _) in &merged {
                    col_count[*c] += 1;
                }
                next.push(merged);
            }
            rows = next;
        }
        rank
    }

    /// The unique scalar `c` with `other = c·self`, if any. Two zero
    /// matrices are proportional with `c = 1` by convention.
    pub fn proportionality(&self, other: &RationalMatrix) -> Result<Option<BigRational>, Error> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let Some(anchor) = self.data.iter().position(|e| !e.is_zero()) else {
            return Ok(if other.is_zero() {
                Some(BigRational::one())
            } else {
                None
            });
        };
        let c = &other.data[anchor] / &self.data[anchor];
        for (a, b) in self.data.iter().zip(&other.data) {
            if *b != a * &c {
                return Ok(None);
            }
        }
        Ok(Some(c))
    }

    /// Writes the shared text format: `ROWS COLS` on the first line, then
    /// row-major entries as `num/den` (`den` omitted when 1), one row per
    /// line.
    pub fn write_text<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{} {}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| {
                    let e = self.get(r, c);
                    if e.denom().is_one() {
                        e.numer().to_string()
                    } else {
                        format!("{}/{}", e.numer(), e.denom())
                    }
                })
                .collect();
            writeln!(w, "{}", line.join(" "))?;
        }
        Ok(())
    }

    /// Reads the text format written by [`RationalMatrix::write_text`].
    pub fn read_text<R: BufRead>(r: R) -> Result<RationalMatrix, Error> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Syntax("empty matrix file".into()))?
            .map_err(|e| Error::Syntax(e.to_string()))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(Error::Syntax(format!("bad matrix header: {header}")));
        }
        let rows: usize = dims[0].parse().map_err(|_| Error::Syntax(header.clone()))?;
        let cols: usize = dims[1].parse().map_err(|_| Error::Syntax(header.clone()))?;
        let mut m = RationalMatrix::zero(rows, cols);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Syntax("truncated matrix file".into()))?
                .map_err(|e| Error::Syntax(e.to_string()))?;
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != cols {
                return Err(Error::Syntax(format!("row {r} has {} entries", entries.len())));
            }
            for (c, tok) in entries.iter().enumerate() {
                m.set(r, c, parse_rational(tok)?);
            }
        }
        Ok(m)
    }
}

/// Parses `num` or `num/den` with optional leading minus.
pub fn parse_rational(tok: &str) -> Result<BigRational, Error> {
    let parse_int = |s: &str| -> Result<BigInt, Error> {
        s.parse().map_err(|_| Error::Syntax(format!("bad number: {tok}")))
    };
    match tok.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Syntax(format!("zero denominator: {tok}")));
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(tok)?)),
    }
}
