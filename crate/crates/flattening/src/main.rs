//! Command-line front end: computes the rank of a Young flattening.
//!
//! Usage: `flattening N MU ROWS POLY [flags]`, e.g.
//! `flattening 3 [5,2,1] [1,2,3] a^3+b*c^2` prints `rank: 18`.

use std::io::Write as _;
use std::process::ExitCode;

use flattening::shapes::remove_boxes;
use flattening::{
    boxfill_matrix, flattening_matrix, flattening_matrix_threaded, glaction, polyio,
    Error, FlatteningMatrix, Partition, RationalMatrix, Straightener,
};

const USAGE: &str = "usage: flattening N MU ROWS POLY [--matrix PATH] [--bound VAR] [--basis] [--boxfill] [--selfcheck]
  N        number of variables (dimension of V)
  MU       target partition, e.g. [5,2,1]
  ROWS     rows whose last box is removed from MU to form the source shape, e.g. [1,2,3]
  POLY     homogeneous polynomial, e.g. a^3+b*c^2 (variables a..w or x0,x1,...; bare x is the first variable)
  --matrix PATH   write the flattening matrix to PATH in the text format
  --bound VAR     also print the Waring rank bound against VAR^d
  --basis         print the ordered row and column tableau bases
  --boxfill       use the naive box-filling map instead of the Pieri inclusion
  --selfcheck     verify the equivariance identity on a fixed test matrix
The environment variable THREADS (positive integer) parallelizes the build.";

struct Invocation {
    n: usize,
    mu: Partition,
    rows: Vec<usize>,
    poly_text: String,
    matrix_path: Option<String>,
    bound_var: Option<String>,
    basis: bool,
    boxfill: bool,
    selfcheck: bool,
}

fn parse_bracket_list(s: &str) -> Option<Vec<usize>> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().ok())
        .collect()
}

fn parse_args(args: &[String]) -> Result<Invocation, String> {
    let mut positional = Vec::new();
    let mut matrix_path = None;
    let mut bound_var = None;
    let mut basis = false;
    let mut boxfill = false;
    let mut selfcheck = false;
    let mut it = args.iter();
    while let Some(a) = it.next() {
        match a.as_str() {
            "--matrix" => {
                matrix_path = Some(
                    it.next()
                        .ok_or_else(|| "--matrix requires a path".to_string())?
                        .clone(),
                );
            }
            "--bound" => {
                bound_var = Some(
                    it.next()
                        .ok_or_else(|| "--bound requires a variable".to_string())?
                        .clone(),
                );
            }
            "--basis" => basis = true,
            "--boxfill" => boxfill = true,
            "--selfcheck" => selfcheck = true,
            other if other.starts_with("--") => {
                return Err(format!("unknown flag: {other}"));
            }
            _ => positional.push(a.clone()),
        }
    }
    if positional.len() != 4 {
        return Err(format!("expected 4 positional arguments, got {}", positional.len()));
    }
    let n: usize = positional[0]
        .parse()
        .map_err(|_| format!("N must be a positive integer, got {}", positional[0]))?;
    if n == 0 {
        return Err("N must be positive".to_string());
    }
    let mu_parts = parse_bracket_list(&positional[1])
        .ok_or_else(|| format!("MU must be a bracket list, got {}", positional[1]))?;
    let mu = Partition::new(mu_parts).map_err(|e| e.to_string())?;
    let rows = parse_bracket_list(&positional[2])
        .ok_or_else(|| format!("ROWS must be a bracket list, got {}", positional[2]))?;
    Ok(Invocation {
        n,
        mu,
        rows,
        poly_text: positional[3].clone(),
        matrix_path,
        bound_var,
        basis,
        boxfill,
        selfcheck,
    })
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Syntax(_) | Error::IndexOutOfRange(_) | Error::NotHomogeneous(_) => 3,
        Error::DegreeMismatch(_) => 4,
        _ => 2,
    }
}

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn threads_from_env() -> Result<usize, String> {
    match std::env::var("THREADS") {
        Ok(v) => v
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| format!("THREADS must be a positive integer, got {v}")),
        Err(_) => Ok(1),
    }
}

/// A fixed invertible test matrix for --selfcheck: ones on the diagonal
/// and a deterministic pattern of small off-diagonal entries.
fn selfcheck_matrix(n: usize) -> RationalMatrix {
    let mut g = RationalMatrix::identity(n);
    let mut state: u64 = 0x9e3779b97f4a7c15;
    for r in 0..n {
        for c in 0..n {
            if r == c {
                continue;
            }
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let v = (state >> 60) as i64 - 7; // in -7..=8
            g.set(r, c, num::BigRational::from_integer(v.into()));
        }
    }
    g
}

fn run_selfcheck(
    lam: &Partition,
    mu: &Partition,
    p: &flattening::Polynomial,
    n: usize,
    f: &FlatteningMatrix,
) -> bool {
    let g = selfcheck_matrix(n);
    if g.inverse().is_none() {
        return false;
    }
    let mut s = Straightener::new();
    let rho_mu = glaction::rep_matrix(mu, n, &g, &mut s);
    let rho_lam = glaction::rep_matrix(lam, n, &g, &mut s);
    let gp = glaction::act_poly(&g, p);
    match flattening_matrix(lam, mu, &gp, n) {
        Ok(fg) => rho_mu.mul(f.matrix()) == fg.matrix().mul(&rho_lam),
        Err(_) => false,
    }
}

fn run(inv: &Invocation) -> Result<u8, (u8, String)> {
    let threads = threads_from_env().map_err(|m| (1, m))?;
    let lam = remove_boxes(&inv.mu, &inv.rows).map_err(|e| (2, e.to_string()))?;
    let p = polyio::parse(inv.n, &inv.poly_text)
        .map_err(|e| (exit_code_for(&e), e.to_string()))?;

    let f = if inv.boxfill {
        boxfill_matrix(&lam, &inv.mu, &p, inv.n)
    } else {
        flattening_matrix_threaded(&lam, &inv.mu, &p, inv.n, threads)
    }
    .map_err(|e| (exit_code_for(&e), e.to_string()))?;

    if inv.basis {
        println!("rows ({}):", inv.mu);
        for t in f.row_basis() {
            println!("{:?}", t.rows());
        }
        println!("cols ({lam}):");
        for t in f.col_basis() {
            println!("{:?}", t.rows());
        }
    }

    if let Some(path) = &inv.matrix_path {
        let file = std::fs::File::create(path)
            .map_err(|e| (1, format!("cannot write {path}: {e}")))?;
        let mut w = std::io::BufWriter::new(file);
        f.matrix()
            .write_text(&mut w)
            .and_then(|()| w.flush())
            .map_err(|e| (1, format!("cannot write {path}: {e}")))?;
    }

    println!("rank: {}", f.rank());

    if let Some(var) = &inv.bound_var {
        let x = polyio::parse_variable(inv.n, var)
            .map_err(|e| (exit_code_for(&e), e.to_string()))?;
        let bound = flattening::waring_bound(&lam, &inv.mu, &p, x, inv.n)
            .map_err(|e| (exit_code_for(&e), e.to_string()))?;
        println!("bound: {bound}");
    }

    if inv.selfcheck {
        if run_selfcheck(&lam, &inv.mu, &p, inv.n, &f) {
            println!("selfcheck: PASS");
        } else {
            println!("selfcheck: FAIL");
            return Ok(1);
        }
    }

    Ok(0)
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--help" || a == "-h") || args.is_empty() {
        println!("{USAGE}");
        return ExitCode::from(if args.is_empty() { 1 } else { 0 });
    }
    let inv = match parse_args(&args) {
        Ok(inv) => inv,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            return ExitCode::from(1);
        }
    };
    match run(&inv) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => fail(code, &msg),
    }
}
