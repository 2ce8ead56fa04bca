//! Homogeneous polynomials over the rationals and the command-line
//! expression parser.
//!
//! Grammar:
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coef | [coef ('*')?] factor ('*' factor)*
//! coef   := integer | integer '/' integer
//! factor := var ('^' nat)?
//! var    := 'a'..'w'        (a is variable 1, b is 2, ...)
//!         | 'x' digits      (zero-based: x0 is variable 1)
//!         | 'x'             (alias for variable 1)
//! ```
//!
//! Whitespace is ignored; the two variable schemes may be mixed. The
//! result must be homogeneous.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::Error;

/// A homogeneous polynomial: exponent vector → nonzero rational
/// coefficient. All exponent vectors have length `nvars` and sum to
/// `degree`; the zero polynomial has no terms and degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial {
            nvars,
            degree: 0,
            terms: BTreeMap::new(),
        }
    }

    /// The monomial `x_var^degree` (`var` 1-based).
    pub fn power_of_variable(nvars: usize, var: usize, degree: usize) -> Polynomial {
        assert!(var >= 1 && var <= nvars);
        let mut alpha = vec![0; nvars];
        alpha[var - 1] = degree;
        let mut p = Polynomial::zero(nvars);
        p.add_term(alpha, BigRational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, BigRational> {
        &self.terms
    }

    /// Adds `c·x^α`, dropping the term if the total cancels. Panics when
    /// the monomial degree disagrees with existing terms.
    pub fn add_term(&mut self, alpha: Vec<usize>, c: BigRational) {
        assert_eq!(alpha.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let d: usize = alpha.iter().sum();
        if self.terms.is_empty() {
            self.degree = d;
        } else {
            assert_eq!(d, self.degree, "inhomogeneous term");
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
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
        if self.terms.is_empty() {
            self.degree = 0;
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let alpha: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(alpha, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (a, v) in &self.terms {
            out.add_term(a.clone(), v * c);
        }
        out
    }

    /// True if the variable (1-based) occurs in some term.
    pub fn uses_variable(&self, var: usize) -> bool {
        self.terms.keys().any(|a| a[var - 1] > 0)
    }
}

/// Parses the grammar above with `n` variables.
pub fn parse(n: usize, src: &str) -> Result<Polynomial, Error> {
    let mut p = Parser {
        chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        nvars: n,
    };
    let poly = p.poly()?;
    if p.pos != p.chars.len() {
        return Err(Error::Syntax(format!(
            "unexpected character '{}' at position {}",
            p.chars[p.pos], p.pos
        )));
    }
    Ok(poly)
}

/// Parses a single variable name (for `--bound VAR`), returning its
/// 1-based index.
pub fn parse_variable(n: usize, src: &str) -> Result<usize, Error> {
    let mut p = Parser {
        chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        nvars: n,
    };
    let v = p.variable()?;
    if p.pos != p.chars.len() {
        return Err(Error::Syntax(format!("trailing input in variable name: {src}")));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn poly(&mut self) -> Result<Polynomial, Error> {
        let mut out = Polynomial::zero(self.nvars);
        let mut negate = false;
        let mut expected_degree: Option<usize> = None;
        if self.peek() == Some('-') {
            self.bump();
            negate = true;
        }
        loop {
            let (alpha, mut coef) = self.term()?;
            if negate {
                coef = -coef;
            }
            // degree check independent of cancellation: "a-a" is fine,
            // "a^2+b" is not, and zero constant terms stay degree-neutral
            let d: usize = alpha.iter().sum();
            if !coef.is_zero() || d != 0 {
                match expected_degree {
                    Some(d0) if d0 != d => {
                        return Err(Error::NotHomogeneous(format!(
                            "terms of degree {d0} and {d}"
                        )))
                    }
                    Some(_) => {}
                    None => expected_degree = Some(d),
                }
            }
            out.add_term(alpha, coef);
            match self.peek() {
                Some('+') => {
                    self.bump();
                    negate = false;
                }
                Some('-') => {
                    self.bump();
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Vec<usize>, BigRational), Error> {
        let mut alpha = vec![0usize; self.nvars];
        let mut coef = BigRational::one();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coef = self.rational()?;
            if self.peek() == Some('*') {
                self.bump();
            } else if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                // bare constant term
                return Ok((alpha, coef));
            }
        }
        loop {
            let var = self.variable()?;
            let exp = if self.peek() == Some('^') {
                self.bump();
                self.natural()?
            } else {
                1
            };
            alpha[var - 1] += exp;
            if self.peek() == Some('*') {
                self.bump();
            } else {
                break;
            }
        }
        Ok((alpha, coef))
    }

    fn variable(&mut self) -> Result<usize, Error> {
        let c = self
            .bump()
            .ok_or_else(|| Error::Syntax("unexpected end of input".into()))?;
        let idx = match c {
            'x' => {
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.natural()? + 1 // zero-based x-scheme
                } else {
                    1 // bare x is the first variable
                }
            }
            'a'..='w' => c as usize - 'a' as usize + 1,
            _ => {
                return Err(Error::Syntax(format!("expected a variable, found '{c}'")));
            }
        };
        if idx > self.nvars {
            return Err(Error::IndexOutOfRange(format!(
                "variable {idx} with only {} variables",
                self.nvars
            )));
        }
        Ok(idx)
    }

    fn natural(&mut self) -> Result<usize, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(Error::Syntax("expected a number".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Syntax(format!("number out of range: {s}")))
    }

    fn rational(&mut self) -> Result<BigRational, Error> {
        let num = BigInt::from(self.natural()?);
        if self.peek() == Some('/') {
            self.bump();
            let den = BigInt::from(self.natural()?);
            if den.is_zero() {
                return Err(Error::Syntax("zero denominator".into()));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }
}

/// Canonical printer, inverse to [`parse`]: alphabetic variable names for
/// `n ≤ 23`, the zero-based x-scheme otherwise.
impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var_name = |i: usize| -> String {
            if self.nvars <= 23 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("x{i}")
            }
        };
        let mut first = true;
        for (alpha, c) in &self.terms {
            let neg = c < &BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || alpha.iter().all(|&e| e == 0) {
                let s = if abs.denom().is_one() {
                    abs.numer().to_string()
                } else {
                    format!("{}/{}", abs.numer(), abs.denom())
                };
                factors.push(s);
            }
            for (i, &e) in alpha.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(var_name(i)),
                    _ => factors.push(format!("{}^{}", var_name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parse_published_examples() {
        let p = parse(3, "a^3+b*c^2").unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(p.terms().get(&vec![3, 0, 0]), Some(&rat(1, 1)));
        assert_eq!(p.terms().get(&vec![0, 1, 2]), Some(&rat(1, 1)));
        assert_eq!(p.terms().len(), 2);

        let p = parse(5, "x^7").unwrap();
        assert_eq!(p.terms().get(&vec![7, 0, 0, 0, 0]), Some(&rat(1, 1)));

        let p = parse(5, "x0^2*x1^2*x2*x3*x4").unwrap();
        assert_eq!(p.terms().get(&vec![2, 2, 1, 1, 1]), Some(&rat(1, 1)));
    }

    #[test]
    fn parse_rejects_inhomogeneous() {
        assert!(matches!(parse(2, "a^2+b"), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn parse_rejects_bad_index() {
        assert!(matches!(parse(2, "c"), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(parse(2, "x5"), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn parse_signs_and_coefficients() {
        let p = parse(2, "-2*a + 1/2*b").unwrap();
        assert_eq!(p.terms().get(&vec![1, 0]), Some(&rat(-2, 1)));
        assert_eq!(p.terms().get(&vec![0, 1]), Some(&rat(1, 2)));

        let p = parse(2, " a ^ 2 - a^2 ").unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn parse_zero_and_constants() {
        assert!(parse(2, "0").unwrap().is_zero());
        let p = parse(2, "3").unwrap();
        assert_eq!(p.degree(), 0);
        assert_eq!(p.terms().get(&vec![0, 0]), Some(&rat(3, 1)));
    }

    #[test]
    fn display_round_trip() {
        for src in ["a^3+b*c^2", "-a*b+2*c^2", "1/2*a^2-b^2"] {
            let p = parse(3, src).unwrap();
            let back = parse(3, &p.to_string()).unwrap();
            assert_eq!(p, back, "printing {src} as {p}");
        }
    }

    #[test]
    fn parse_variable_names() {
        assert_eq!(parse_variable(3, "a").unwrap(), 1);
        assert_eq!(parse_variable(3, "c").unwrap(), 3);
        assert_eq!(parse_variable(5, "x").unwrap(), 1);
        assert_eq!(parse_variable(5, "x4").unwrap(), 5);
        assert!(parse_variable(3, "x9").is_err());
    }
}
