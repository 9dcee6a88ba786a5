//! Exact chromatic polynomials and certificates for non-real chromatic roots.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: dense polynomials generic over the coefficient ring, with
//!   integer, rational and floating aliases below.
//! * [`graph`]: bitset graphs, generators, seeded G(n,p) sampling, graph6 and
//!   edge-list I/O.
//! * [`census`]: the nine small-subgraph statistics that fix the top five
//!   chromatic coefficients.
//! * [`chromatic`]: deletion–contraction, falling-factorial form, and the
//!   census-based coefficient formula.
//! * [`ring`]: the ring-of-cliques `C4(a,b,c,d)` polynomial chain and the
//!   `W` recurrence.
//! * [`roots`]: Sturm counting, numeric roots, discriminant certificates,
//!   convex-hull containment and classical root-location bounds.
//! * [`experiments`]: random sweeps, corpus statistics and scaling scans.

pub mod census;
pub mod chromatic;
pub mod experiments;
pub mod graph;
pub mod poly;
pub mod ring;
pub mod roots;
pub mod scalar;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use graph::Graph;
pub use poly::Poly;

/// Exact integer-coefficient polynomial (chromatic polynomials, derivatives).
pub type IntPolynomial = Poly<BigInt>;
/// Exact rational-coefficient polynomial (`Q`, `F`, `W` and `f_a`).
pub type RatPolynomial = Poly<BigRational>;
/// Double-precision polynomial for numeric work.
pub type FloatPolynomial = Poly<f64>;

/// Census counts as exact integers.
pub type SubgraphCounts = census::Census<u64>;
/// Census expectations under G(n,p) as exact rationals.
pub type ExpectedCounts = census::Census<BigRational>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("deletion-contraction exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
    #[error("computation failed: {0}")]
    Computation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
