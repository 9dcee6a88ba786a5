//! Root extraction and certificates.
//!
//! Numeric roots come from Aberth–Ehrlich iteration on each square-free factor;
//! every real/nonreal decision is made exactly with Sturm sequences.

pub mod discriminant;
pub mod hull;
pub mod numeric;
pub mod sanity;
pub mod sturm;

pub use discriminant::{quadratic_disc_test, quartic_discriminant, quartic_from_counts, DiscriminantReport};
pub use hull::{hull_containment, HullReport};
pub use sanity::{root_location_sanity, SanityReport};
pub use sturm::{count_real_roots, isolate_real_roots, IsolatedRoot, RealRootCount, SturmChain};

use crate::{Error, IntPolynomial, RatPolynomial, Result};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// Relative residual accepted for a numeric root.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AllReal {
    Yes,
    No,
    Indeterminate,
}

impl From<bool> for AllReal {
    fn from(b: bool) -> Self {
        if b {
            AllReal::Yes
        } else {
            AllReal::No
        }
    }
}

impl Serialize for AllReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AllReal::Yes => s.serialize_bool(true),
            AllReal::No => s.serialize_bool(false),
            AllReal::Indeterminate => s.serialize_str("indeterminate"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSet {
    /// Roots with multiplicity, sorted by real then imaginary part.
    pub roots: Vec<Complex64>,
    /// Largest relative residual over the roots, `p` made monic (see [`RESIDUAL_TOLERANCE`]).
    pub residual: f64,
    pub all_real: AllReal,
    /// False when the iteration stalled or a residual exceeded the tolerance.
    pub converged: bool,
}

impl RootSet {
    pub fn max_imag(&self) -> f64 {
        self.roots.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_real(&self) -> f64 {
        self.roots.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn nonreal(&self) -> impl Iterator<Item = &Complex64> {
        self.roots.iter().filter(|z| z.im != 0.0)
    }

    pub fn report(&self) -> RootReport {
        RootReport {
            roots: self.roots.iter().map(|z| [z.re, z.im]).collect(),
            all_real: self.all_real,
            max_imag: self.max_imag(),
            residual: self.residual,
            converged: self.converged,
        }
    }
}

/// JSON shape of a root report.
#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    pub roots: Vec<[f64; 2]>,
    pub all_real: AllReal,
    pub max_imag: f64,
    pub residual: f64,
    pub converged: bool,
}

fn monic_f64(p: &RatPolynomial) -> Vec<f64> {
    let lead = p.leading().expect("nonzero").clone();
    p.coeffs().iter().map(|c| (c / &lead).to_f64().unwrap_or(f64::NAN)).collect()
}

/// `|p(z)|` relative to `max(max|a_i|, sum |a_i| |z|^i)`; the second term is
/// the rounding floor of evaluating `p` near a root of modulus above one.
fn residual(c: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    let spread = c.iter().rev().fold(0.0, |acc, a| acc * r + a.abs());
    let scale = c.iter().map(|a| a.abs()).fold(spread, f64::max).max(f64::MIN_POSITIVE);
    let p = c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    p.norm() / scale
}

/// All complex roots of `p` with multiplicity.
pub fn find_roots(p: &IntPolynomial) -> Result<RootSet> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument("root finding needs degree >= 1".into()));
    }
    let counts = count_real_roots(p)?;
    let full = monic_f64(&p.to_rational());
    let mut roots = Vec::with_capacity(p.degree().unwrap());
    let mut converged = true;
    for (factor, mult) in sturm::square_free_decomposition(&p.to_rational()) {
        let n_real = SturmChain::new(&factor.clear_denominators())?.count_real();
        let c = monic_f64(&factor);
        let mut z = match numeric::aberth(&c) {
            Some(z) => z,
            None => {
                converged = false;
                continue;
            }
        };
        numeric::polish(&c, &mut z);
        // The exact count says how many of these are real; snap those.
        z.sort_by(|a, b| a.im.abs().total_cmp(&b.im.abs()));
        for w in z.iter_mut().take(n_real) {
            w.im = 0.0;
        }
        for w in z {
            roots.extend(std::iter::repeat_n(w, mult));
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let residual = roots.iter().map(|&z| residual(&full, z)).fold(0.0, f64::max);
    if !(residual <= RESIDUAL_TOLERANCE) || roots.len() != p.degree().unwrap() {
        converged = false;
    }
    Ok(RootSet { roots, residual, all_real: counts.all_real().into(), converged })
}

pub fn find_roots_rational(p: &RatPolynomial) -> Result<RootSet> {
    find_roots(&p.clear_denominators())
}

/// Purely numeric variant for floating inputs; `all_real` is `Indeterminate`.
pub fn find_roots_float(c: &[f64]) -> Result<RootSet> {
    let n = c.iter().rposition(|&a| a != 0.0).unwrap_or(0);
    if n == 0 {
        return Err(Error::InvalidArgument("root finding needs degree >= 1".into()));
    }
    let c: Vec<f64> = c[..=n].iter().map(|a| a / c[n]).collect();
    let (mut roots, mut converged) = match numeric::aberth(&c) {
        Some(z) => (z, true),
        None => (Vec::new(), false),
    };
    numeric::polish(&c, &mut roots);
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let residual = roots.iter().map(|&z| residual(&c, z)).fold(0.0, f64::max);
    if !(residual <= RESIDUAL_TOLERANCE) || roots.len() != n {
        converged = false;
    }
    Ok(RootSet { roots, residual, all_real: AllReal::Indeterminate, converged })
}
