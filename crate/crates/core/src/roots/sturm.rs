//! Exact real-root counting and isolation with Sturm sequences over `Z[x]`.

use crate::{Error, IntPolynomial, Poly, RatPolynomial, Result};
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sturm sequence `p, p', -rem(p, p'), ...`, each term rescaled by a positive
/// constant so the sign pattern at any point is unchanged.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPolynomial>,
}

fn sign_of(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

fn changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InvalidArgument("Sturm sequence of the zero polynomial".into()));
        }
        let mut seq = vec![p.primitive_part()];
        let d = p.derivative().primitive_part();
        if !d.is_zero() {
            seq.push(d);
        }
        while seq.len() >= 2 {
            let r = seq[seq.len() - 2].sign_preserving_rem(&seq[seq.len() - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        Ok(SturmChain { seq })
    }

    /// Last element of the chain: `gcd(p, p')` up to a constant.
    pub fn gcd(&self) -> &IntPolynomial {
        self.seq.last().expect("chain is never empty")
    }

    fn changes_at(&self, x: &BigRational) -> usize {
        changes(self.seq.iter().map(|q| sign_of(q.sign_at(x.numer(), x.denom()))))
    }

    fn changes_at_infinity(&self, positive: bool) -> usize {
        changes(self.seq.iter().map(|q| {
            let lead = q.leading().expect("chain terms are nonzero").signum();
            let s = if lead.is_positive() { 1 } else { -1 };
            if positive || q.degree().unwrap() % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.changes_at_infinity(false) - self.changes_at_infinity(true)
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.changes_at(lo).saturating_sub(self.changes_at(hi))
    }
}

/// `p / gcd(p, p')` as a primitive integer polynomial with positive leading coefficient.
pub fn square_free_part(p: &IntPolynomial) -> Result<IntPolynomial> {
    let chain = SturmChain::new(p)?;
    let g = chain.gcd();
    let q = if g.degree() == Some(0) {
        p.primitive_part()
    } else {
        p.to_rational().exact_div(&g.to_rational())?.clear_denominators()
    };
    Ok(if q.leading().is_some_and(|l| l.is_negative()) { -&q } else { q })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RealRootCount {
    /// Distinct real roots.
    pub distinct_real: usize,
    /// Degree of the square-free part (number of distinct complex roots).
    pub distinct_total: usize,
}

impl RealRootCount {
    pub fn all_real(&self) -> bool {
        self.distinct_real == self.distinct_total
    }
}

/// Count distinct real roots exactly and decide whether every root is real.
pub fn count_real_roots(p: &IntPolynomial) -> Result<RealRootCount> {
    let chain = SturmChain::new(p)?;
    let total = p.degree().unwrap() - chain.gcd().degree().unwrap();
    Ok(RealRootCount { distinct_real: chain.count_real(), distinct_total: total })
}

pub fn count_real_roots_rational(p: &RatPolynomial) -> Result<RealRootCount> {
    count_real_roots(&p.clear_denominators())
}

/// A real root known to lie in `(lo, hi]` (or exactly at `lo == hi`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl IsolatedRoot {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// A power of two exceeding every root modulus (Fujiwara's bound
/// `2 max_k |a_{n-k} / a_n|^{1/k}` rounded up through bit lengths).
pub fn root_bound(p: &IntPolynomial) -> BigInt {
    let n = p.degree().expect("nonzero");
    let lead_bits = p.coeff(n).bits() as i64;
    let mut e = 0i64;
    for k in 1..=n {
        let c = p.coeff(n - k);
        if c.is_zero() {
            continue;
        }
        // |a_{n-k} / a_n| < 2^(bits(a_{n-k}) - bits(a_n) + 1)
        let num = c.bits() as i64 - lead_bits + 1;
        e = e.max(num.div_euclid(k as i64) + 1);
    }
    BigInt::one() << (e + 1) as usize
}

/// Isolate every distinct real root of `p` and refine each to width below `tol`.
/// Roots come back in increasing order.
pub fn isolate_real_roots(p: &IntPolynomial, tol: &BigRational) -> Result<Vec<IsolatedRoot>> {
    let sqf = square_free_part(p)?;
    let chain = SturmChain::new(&sqf)?;
    let bound = BigRational::from_integer(root_bound(&sqf));
    let two = BigRational::from_integer(BigInt::from(2));
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        match chain.count_in(&lo, &hi) {
            0 => {}
            1 => out.push(refine(&sqf, lo, hi, tol)),
            _ => {
                let mid = (&lo + &hi) / &two;
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

fn sign_at(p: &IntPolynomial, x: &BigRational) -> Sign {
    p.sign_at(x.numer(), x.denom())
}

/// Bisect an interval `(lo, hi]` holding exactly one simple root of square-free `p`.
fn refine(p: &IntPolynomial, mut lo: BigRational, mut hi: BigRational, tol: &BigRational) -> IsolatedRoot {
    let two = BigRational::from_integer(BigInt::from(2));
    let s_hi = sign_at(p, &hi);
    if s_hi == Sign::NoSign {
        return IsolatedRoot { lo: hi.clone(), hi };
    }
    while &(&hi - &lo) >= tol {
        let mid = (&lo + &hi) / &two;
        let s = sign_at(p, &mid);
        if s == Sign::NoSign {
            return IsolatedRoot { lo: mid.clone(), hi: mid };
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    IsolatedRoot { lo, hi }
}

/// Yun's square-free factorisation over `Q`: `p = c * prod_i f_i^i` with each
/// `f_i` monic, square-free and pairwise coprime. Returns `(f_i, i)` for the
/// nonconstant factors.
pub fn square_free_decomposition(p: &RatPolynomial) -> Vec<(RatPolynomial, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let f = p.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = df.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Convenience: the integer polynomial with the given integer roots.
pub fn from_roots(roots: &[i64]) -> IntPolynomial {
    roots
        .iter()
        .fold(Poly::one(), |acc, &r| &acc * &Poly::linear_root(BigInt::from(r)))
}
