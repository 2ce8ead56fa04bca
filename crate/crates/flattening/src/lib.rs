//! Exact Young flattenings for border Waring rank lower bounds.
//!
//! This crate computes the flattening matrix `F_{λ,μ}(p)` of a homogeneous
//! polynomial `p` in the semistandard bases of the Schur modules `S^λV`
//! and `S^μV`, entirely over the rationals. From the exact rank of that
//! matrix it derives the lower bound `⌈rank F(p) / rank F(x^d)⌉` on the
//! border Waring rank of `p`.
//!
//! The pipeline, bottom to top:
//!
//! - [`shapes`]: partitions, cells, semistandard Young tableaux, Schur
//!   module dimensions.
//! - [`exterior`]: column tableaux spanning the product of exterior
//!   powers `X^{λ*}V`, with the signed box-moving operators `σ_{i,j}`.
//! - [`straighten`]: the Grassmann–Plücker straightening algorithm
//!   rewriting any column tableau in the semistandard basis.
//! - [`pieri`]: the hook-weighted Pieri inclusion `ζ` and its
//!   horizontal-strip composition `ψ`.
//! - [`flatten`]: assembly of `F_{λ,μ}(p)` one basis column at a time,
//!   the naive box-filling variant, and the Waring bound.
//! - [`glaction`]: the `GL_n` action on polynomials and Schur modules,
//!   used for equivariance cross-checks.
//! - [`exactla`]: exact rational matrices with fraction-free rank.
//! - [`polyio`]: the polynomial surface syntax.
//!
//! ```
//! use flattening::{flattening_matrix, polyio, shapes::Partition};
//!
//! let lam = Partition::new(vec![4, 1]).unwrap();
//! let mu = Partition::new(vec![5, 2, 1]).unwrap();
//! let p = polyio::parse(3, "a^3 + b*c^2").unwrap();
//! let f = flattening_matrix(&lam, &mu, &p, 3).unwrap();
//! assert_eq!(f.rank(), 18);
//! ```

pub mod exactla;
pub mod exterior;
pub mod flatten;
pub mod glaction;
pub mod pieri;
pub mod polyio;
pub mod shapes;
pub mod straighten;

pub use exactla::RationalMatrix;
pub use flatten::{
    boxfill_matrix, embed_symmetric, flattening_matrix, flattening_matrix_threaded,
    waring_bound, FlatteningMatrix,
};
pub use glaction::{act_poly, rep_matrix};
pub use pieri::{psi, z_witness, zeta, PieriProblem};
pub use polyio::Polynomial;
pub use shapes::{Partition, Ssyt};
pub use straighten::{SchurVector, Straightener};

/// Errors surfaced by shape validation, parsing, and matrix plumbing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The given parts are not weakly decreasing nonnegative integers.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    /// Removing the requested boxes leaves a non-partition shape.
    #[error("invalid removal: {0}")]
    InvalidRemoval(String),
    /// The skew shape `μ/λ` is not a horizontal strip.
    #[error("not a horizontal strip: {0}")]
    NotAStrip(String),
    /// A shape constraint failed (rows exceed the dimension, bad column, …).
    #[error("shape error: {0}")]
    ShapeError(String),
    /// Degrees or word lengths do not match the strip size.
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    /// Matrix dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A parse error in polynomial or matrix text.
    #[error("syntax error: {0}")]
    Syntax(String),
    /// A variable index outside `1..=n`.
    #[error("variable index out of range: {0}")]
    IndexOutOfRange(String),
    /// The polynomial mixes terms of different degrees.
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    /// An input outside the domain of the requested quantity (e.g. the
    /// zero polynomial for a rank bound).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
}

/// Keeps the guide's code blocks compiling: each chapter of `book/` is
/// attached here as a doc-test.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(shapes_and_tableaux, "../../../book/src/shapes-and-tableaux.md");
    chapter!(columns_and_signs, "../../../book/src/columns-and-signs.md");
    chapter!(straightening, "../../../book/src/straightening.md");
    chapter!(pieri_maps, "../../../book/src/pieri-maps.md");
    chapter!(flattenings, "../../../book/src/flattenings.md");
    chapter!(exact_rank, "../../../book/src/exact-rank.md");
    chapter!(command_line, "../../../book/src/command-line.md");
}
