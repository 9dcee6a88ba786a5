//! Rings of four cliques `C4(a,b,c,d)`: the `pi -> Q -> F -> W` chain, the
//! three-term `W` recurrence, and the quadratic bound on the leftmost root of
//! the symmetric `W_a`.
//!
//! The nonreal chromatic roots of `C4(a,b,c,d)` are `(n-1)/2 ± i sqrt(-r)` for
//! the negative roots `r` of `W`.

use crate::chromatic::chromatic_polynomial;
use crate::graph::{ring_cliques, RingParams};
use crate::roots::sturm::{isolate_real_roots, SturmChain};
use crate::roots::IsolatedRoot;
use crate::{Error, IntPolynomial, Poly, RatPolynomial, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `W_{a,p,q,k}` by the three-term recurrence:
/// `W_0 = 1`, `W_1 = z + pq + pk + qk`, and for `a >= 2`
/// `W_a = (z + (a-1)(2p+2q+2k+2a-3) + pq+pk+qk) W_{a-1}
///        - (a-1)(p+q+a-2)(q+k+a-2)(p+k+a-2) W_{a-2}`.
pub fn w_polynomial(a: usize, p: &BigRational, q: &BigRational, k: &BigRational) -> RatPolynomial {
    let s = p * q + p * k + q * k;
    let mut prev = Poly::one();
    if a == 0 {
        return prev;
    }
    let mut cur = Poly::new(vec![s.clone(), BigRational::one()]);
    for i in 2..=a {
        let i1 = int(i as i64 - 1);
        let i2 = int(i as i64 - 2);
        let shift = &i1 * (int(2) * (p + q + k) + int(2 * i as i64 - 3)) + &s;
        let mult = &i1 * (p + q + &i2) * (q + k + &i2) * (p + k + &i2);
        let next = &(&Poly::new(vec![shift, BigRational::one()]) * &cur) - &prev.scale(&mult);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Symmetric case `p = q = k = 1/2` (all four blocks equal).
pub fn w_symmetric(a: usize) -> RatPolynomial {
    let h = frac(1, 2);
    w_polynomial(a, &h, &h, &h)
}

/// `Q = pi (x)_{a+c} / ((x)_{b+c} (x)_{c+d})`, checked to divide exactly.
pub fn q_polynomial(params: RingParams, pi: &IntPolynomial) -> Result<RatPolynomial> {
    let RingParams { a, b, c, d } = params;
    let ff = |k: usize| Poly::<BigInt>::falling_factorial(k).to_rational();
    let num = &pi.to_rational() * &ff(a + c);
    let den = &ff(b + c) * &ff(c + d);
    num.exact_div(&den)
}

/// `F(z) = Q(z + (n-1)/2)`; a nonzero odd coefficient is an error.
pub fn f_from_q(params: RingParams, q: &RatPolynomial) -> Result<RatPolynomial> {
    let f = q.taylor_shift(&frac(params.order() as i64 - 1, 2));
    if let Some(i) = (1..f.coeffs().len()).step_by(2).find(|&i| !f.coeff(i).is_zero()) {
        return Err(Error::Computation(format!(
            "F for {params:?} has nonzero odd coefficient at degree {i}"
        )));
    }
    Ok(f)
}

/// `W(y)` with `F(z) = W(z^2)`; `f` must be even.
pub fn w_from_f(f: &RatPolynomial) -> Result<RatPolynomial> {
    let c = f.coeffs();
    if let Some(i) = (1..c.len()).step_by(2).find(|&i| !c[i].is_zero()) {
        return Err(Error::Computation(format!("F is not even: degree {i} coefficient is nonzero")));
    }
    Ok(Poly::new(c.iter().step_by(2).cloned().collect()))
}

/// The whole chain from the graph: `pi`, `Q`, `F`, `W`.
#[derive(Clone, Debug)]
pub struct RingChain {
    pub params: RingParams,
    pub pi: IntPolynomial,
    pub q: RatPolynomial,
    pub f: RatPolynomial,
    pub w: RatPolynomial,
}

pub fn ring_chain(params: RingParams) -> Result<RingChain> {
    let pi = chromatic_polynomial(&ring_cliques(params)?)?;
    let q = q_polynomial(params, &pi)?;
    let f = f_from_q(params, &q)?;
    let w = w_from_f(&f)?;
    Ok(RingChain { params, pi, q, f, w })
}

/// The three leading coefficients of the symmetric `W_a`, in closed form:
/// `1`, `2a^3/3 + a/12`, and
/// `2a^6/9 - 3a^5/5 + 5a^4/9 - a^3/6 + a^2/288 - 7a/480`.
pub fn w_leading_coefficients(a: usize) -> [BigRational; 3] {
    let a = int(a as i64);
    let pow = |e: i32| num_traits::pow(a.clone(), e as usize);
    let c1 = frac(2, 3) * pow(3) + frac(1, 12) * &a;
    let c2 = frac(2, 9) * pow(6) - frac(3, 5) * pow(5) + frac(5, 9) * pow(4) - frac(1, 6) * pow(3)
        + frac(1, 288) * pow(2)
        - frac(7, 480) * &a;
    [BigRational::one(), c1, c2]
}

/// Check that the recurrence-built `W_a` has the closed-form leading coefficients.
pub fn check_leading_coefficients(a: usize) -> Result<()> {
    let w = w_symmetric(a);
    let want = w_leading_coefficients(a);
    for (j, c) in want.iter().enumerate().take(a + 1) {
        if &w.coeff(a - j) != c {
            return Err(Error::Computation(format!(
                "W_{a}: coefficient of z^{} is {}, closed form gives {c}",
                a - j,
                w.coeff(a - j)
            )));
        }
    }
    Ok(())
}

/// `f_a = (a(a-1)/2) z^2 + (a-1) c1 z + c2`, i.e. `W_a^{(a-2)} / (a-2)!`.
pub fn f_quadratic(a: usize) -> Result<RatPolynomial> {
    if a < 2 {
        return Err(Error::InvalidArgument(format!("f_a needs a >= 2, got {a}")));
    }
    let [_, c1, c2] = w_leading_coefficients(a);
    let a_r = int(a as i64);
    let a1 = int(a as i64 - 1);
    Ok(Poly::new(vec![c2, &a1 * c1, &a_r * &a1 / int(2)]))
}

/// Both roots of `f_a`: `-2a^2/3 - 1/12 ± sqrt(170a^3 - 55a^2 - 5a - 5) / 15`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LeftmostBound {
    pub a: usize,
    pub r_minus: f64,
    pub r_plus: f64,
}

impl LeftmostBound {
    /// `r_plus / (16 a^2)`, which tends to `-1/24`.
    pub fn scaled_plus(&self) -> f64 {
        let a = self.a as f64;
        self.r_plus / (16.0 * a * a)
    }
}

pub fn leftmost_root_bound(a: usize) -> Result<LeftmostBound> {
    if a < 2 {
        return Err(Error::InvalidArgument(format!("leftmost root bound needs a >= 2, got {a}")));
    }
    let x = a as f64;
    let centre = -2.0 / 3.0 * x * x - 1.0 / 12.0;
    let rad = (170.0 * x.powi(3) - 55.0 * x * x - 5.0 * x - 5.0).sqrt() / 15.0;
    Ok(LeftmostBound { a, r_minus: centre - rad, r_plus: centre + rad })
}

/// A certified root `r` of `W` with `lo < r <= hi` (or exact when equal).
#[derive(Clone, Debug, Serialize)]
pub struct WRoot {
    pub lo: f64,
    pub hi: f64,
    pub value: f64,
}

impl From<&IsolatedRoot> for WRoot {
    fn from(r: &IsolatedRoot) -> Self {
        WRoot {
            lo: r.lo.to_f64().unwrap_or(f64::NAN),
            hi: r.hi.to_f64().unwrap_or(f64::NAN),
            value: r.to_f64(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RingRootReport {
    pub params: RingParams,
    pub n: usize,
    /// Real roots of `W`, increasing; certified nonpositive for symmetric rings.
    pub w_roots: Vec<WRoot>,
    /// Upper-half-plane representatives `[(n-1)/2, sqrt(-r)]`.
    pub chromatic_nonreal: Vec<[f64; 2]>,
    /// Leftmost root `R` of `W`.
    pub leftmost: f64,
    /// `sqrt(-R)`, with certified lower and upper bounds.
    pub max_imag: f64,
    pub max_imag_bounds: [f64; 2],
    /// Roots of `f_a` (symmetric rings with `a >= 2` only).
    pub bound: Option<LeftmostBound>,
    /// True when `W` was also rebuilt from the chromatic polynomial and matched.
    pub chain_checked: bool,
}

/// Default isolation width for [`ring_root_report`].
pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(20))
}

/// Orders up to this size also rebuild `W` from the chromatic polynomial.
pub const CHAIN_CHECK_MAX_ORDER: usize = 12;

/// Certify that every root of `W` is real (and nonpositive when asked), then
/// isolate them to width below `tol`.
///
/// Asymmetric rings can have positive roots: `C4(2,3,1,2)` gives `W = (y - 1/4)(...)`,
/// the real chromatic roots 3 and 4.
pub fn certified_w_roots(w: &RatPolynomial, tol: &BigRational, nonpositive: bool) -> Result<Vec<IsolatedRoot>> {
    let wi = w.clear_denominators();
    if wi.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&wi)?;
    let distinct = wi.degree().unwrap() - chain.gcd().degree().unwrap();
    if chain.count_real() != distinct {
        return Err(Error::Computation(format!(
            "W has {} distinct real roots but {distinct} distinct roots",
            chain.count_real()
        )));
    }
    let roots = isolate_real_roots(&wi, tol)?;
    if let Some(r) = roots.iter().find(|r| nonpositive && r.lo.is_positive()) {
        return Err(Error::Computation(format!("W has a positive root near {}", r.to_f64())));
    }
    Ok(roots)
}

pub fn ring_root_report(params: RingParams, tol: &BigRational) -> Result<RingRootReport> {
    let params = RingParams::new(params.a, params.b, params.c, params.d)?;
    let n = params.order();
    let w = w_polynomial(params.a, &params.p(), &params.q(), &params.k());
    let chain_checked = n <= CHAIN_CHECK_MAX_ORDER;
    if chain_checked {
        let chain = ring_chain(params)?;
        if chain.w != w {
            return Err(Error::Computation(format!(
                "W from the chromatic polynomial of {params:?} differs from the recurrence"
            )));
        }
    }
    let symmetric = params.a == params.b && params.b == params.c && params.c == params.d;
    let roots = certified_w_roots(&w, tol, symmetric)?;
    let centre = (n as f64 - 1.0) / 2.0;
    let sqrt_neg = |x: &BigRational| (-x.to_f64().unwrap_or(f64::NAN)).max(0.0).sqrt();
    let chromatic_nonreal = roots
        .iter()
        .filter(|r| r.hi.is_negative())
        .map(|r| [centre, sqrt_neg(&r.midpoint())])
        .collect();
    let (leftmost, max_imag, max_imag_bounds) = match roots.first() {
        Some(r) => (r.to_f64(), sqrt_neg(&r.midpoint()), [sqrt_neg(&r.hi), sqrt_neg(&r.lo)]),
        None => (f64::NAN, 0.0, [0.0, 0.0]),
    };
    let bound = if symmetric && params.a >= 2 { Some(leftmost_root_bound(params.a)?) } else { None };
    Ok(RingRootReport {
        params,
        n,
        w_roots: roots.iter().map(WRoot::from).collect(),
        chromatic_nonreal,
        leftmost,
        max_imag,
        max_imag_bounds,
        bound,
        chain_checked,
    })
}

/// One row of the leftmost-root scan over symmetric rings.
#[derive(Clone, Debug, Serialize)]
pub struct RingScanRow {
    pub a: usize,
    /// Leftmost root `R_a` of `W_a`.
    pub leftmost: f64,
    /// `R_a / n^2` with `n = 4a`.
    pub leftmost_scaled: f64,
    pub r_plus: f64,
    /// `sqrt(-R_a) / n`, a lower bound on `maximaginary(n) / n`.
    pub imag_ratio: f64,
    /// Certified lower bound on `imag_ratio`.
    pub imag_ratio_lower: f64,
}

pub const RING_SCAN_HEADER: &str = "a,R_a,R_a/(16a^2),r_plus,sqrt(-R_a)/(4a)";

impl RingScanRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{:.12e},{:.12e},{:.12e},{:.12}",
            self.a, self.leftmost, self.leftmost_scaled, self.r_plus, self.imag_ratio
        )
    }
}

/// Leftmost roots of `W_a` for `2 <= a <= amax`, computed in parallel.
pub fn ring_scan(amax: usize, tol: &BigRational) -> Result<Vec<RingScanRow>> {
    (2..=amax.max(1))
        .into_par_iter()
        .map(|a| {
            check_leading_coefficients(a)?;
            let roots = certified_w_roots(&w_symmetric(a), tol, true)?;
            let r = roots.first().expect("degree a >= 2");
            let n = 4.0 * a as f64;
            let leftmost = r.to_f64();
            let lower = (-r.hi.to_f64().unwrap()).max(0.0).sqrt() / n;
            Ok(RingScanRow {
                a,
                leftmost,
                leftmost_scaled: leftmost / (n * n),
                r_plus: leftmost_root_bound(a)?.r_plus,
                imag_ratio: (-leftmost).sqrt() / n,
                imag_ratio_lower: lower,
            })
        })
        .collect()
}

pub fn ring_scan_csv(rows: &[RingScanRow]) -> String {
    let mut s = String::from(RING_SCAN_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.csv());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ri(c: &[(i64, i64)]) -> RatPolynomial {
        Poly::new(c.iter().map(|&(n, d)| frac(n, d)).collect())
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(w_symmetric(0), Poly::one());
        assert_eq!(w_symmetric(1), ri(&[(3, 4), (1, 1)]));
        assert_eq!(w_symmetric(2), ri(&[(41, 16), (11, 2), (1, 1)]));
        let (p, q, k) = (frac(3, 2), frac(-1, 2), frac(1, 2));
        // pq + pk + qk = -3/4 + 3/4 - 1/4
        assert_eq!(w_polynomial(1, &p, &q, &k), ri(&[(-1, 4), (1, 1)]));
        assert_eq!(w_symmetric(2).eval(&int(0)), frac(41, 16));
    }

    #[test]
    fn symmetric_recurrence_matches_general() {
        // The simplified symmetric recurrence, written out independently.
        let mut prev = Poly::one();
        let mut cur = ri(&[(3, 4), (1, 1)]);
        for a in 2..=12i64 {
            let lin = Poly::new(vec![int(2 * (a - 1) * a) + frac(3, 4), BigRational::one()]);
            let next = &(&lin * &cur) - &prev.scale(&int((a - 1).pow(4)));
            prev = std::mem::replace(&mut cur, next);
            assert_eq!(cur, w_symmetric(a as usize), "a = {a}");
        }
    }

    #[test]
    fn chain_for_unit_ring() {
        let params = RingParams::new(1, 1, 1, 1).unwrap();
        let chain = ring_chain(params).unwrap();
        assert_eq!(chain.q, ri(&[(3, 1), (-3, 1), (1, 1)]));
        assert_eq!(chain.f, ri(&[(3, 4), (0, 1), (1, 1)]));
        assert_eq!(chain.w, w_symmetric(1));
    }

    #[test]
    fn chain_for_2222() {
        let chain = ring_chain(RingParams::symmetric(2).unwrap()).unwrap();
        assert_eq!(chain.w, w_symmetric(2));
    }

    #[test]
    fn rejects_odd_f() {
        let params = RingParams::new(1, 1, 1, 1).unwrap();
        assert!(f_from_q(params, &ri(&[(1, 1), (1, 1)])).is_err());
        assert!(w_from_f(&ri(&[(1, 1), (1, 1)])).is_err());
        assert!(q_polynomial(params, &Poly::from_i64s(&[1, 1, 1, 1, 1])).is_err());
    }

    #[test]
    fn leading_coefficients_hold() {
        for a in 0..=40 {
            check_leading_coefficients(a).unwrap();
        }
    }

    #[test]
    fn f2_and_its_roots() {
        assert_eq!(f_quadratic(2).unwrap(), w_symmetric(2));
        let b = leftmost_root_bound(2).unwrap();
        let (b1, c) = (5.5f64, 41.0 / 16.0);
        let s = (b1 * b1 - 4.0 * c).sqrt();
        assert!((b.r_minus - (-b1 - s) / 2.0).abs() < 1e-12);
        assert!((b.r_plus - (-b1 + s) / 2.0).abs() < 1e-12);
        assert!((b.r_plus + 0.5139).abs() < 1e-4 && (b.r_minus + 4.9861).abs() < 1e-4);
        assert!(leftmost_root_bound(1).is_err());
        assert!(f_quadratic(1).is_err());
    }

    #[test]
    fn f_quadratic_is_scaled_derivative() {
        for a in 2..=15usize {
            let d = w_symmetric(a).nth_derivative(a - 2);
            let fact: BigInt = (1..=a as i64 - 2).map(BigInt::from).product();
            assert_eq!(d.scale(&(BigRational::one() / BigRational::from_integer(fact))), f_quadratic(a).unwrap());
        }
    }

    #[test]
    fn closed_form_roots_match_quadratic_formula() {
        for a in [3usize, 7, 20, 40] {
            let f = f_quadratic(a).unwrap();
            let c: Vec<f64> = f.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
            let disc = c[1] * c[1] - 4.0 * c[2] * c[0];
            let r_plus = (-c[1] + disc.sqrt()) / (2.0 * c[2]);
            let b = leftmost_root_bound(a).unwrap();
            assert!((b.r_plus - r_plus).abs() < 1e-9 * r_plus.abs(), "a = {a}");
        }
    }

    #[test]
    fn scaled_bound_limit() {
        let at = |a| leftmost_root_bound(a).unwrap().scaled_plus();
        assert!((at(100) + 0.0362).abs() < 5e-4);
        let mut gap = f64::MAX;
        for a in (2..=2000).step_by(50) {
            let g = (at(a) + 1.0 / 24.0).abs();
            assert!(g < gap);
            gap = g;
        }
        assert!((at(2000) + 1.0 / 24.0).abs() < 0.01);
    }

    #[test]
    fn unit_ring_report() {
        let r = ring_root_report(RingParams::new(1, 1, 1, 1).unwrap(), &default_tolerance()).unwrap();
        assert!(r.chain_checked);
        assert_eq!(r.chromatic_nonreal.len(), 1);
        assert_eq!(r.chromatic_nonreal[0][0], 1.5);
        assert!((r.max_imag - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!(r.max_imag_bounds[0] <= r.max_imag && r.max_imag <= r.max_imag_bounds[1]);
        assert!(r.bound.is_none());
    }

    #[test]
    fn asymmetric_report_uses_general_recurrence() {
        let r = ring_root_report(RingParams::new(2, 3, 1, 2).unwrap(), &default_tolerance()).unwrap();
        assert!(r.chain_checked);
        assert_eq!(r.w_roots.len(), 2);
        assert!((r.w_roots[1].value - 0.25).abs() < 1e-15);
        assert_eq!(r.chromatic_nonreal.len(), 1);
    }

    #[test]
    fn small_scan() {
        let rows = ring_scan(6, &BigRational::new(BigInt::one(), BigInt::from(1u64 << 40))).unwrap();
        assert_eq!(rows.len(), 5);
        for r in &rows {
            assert!(r.leftmost <= r.r_plus);
            assert!(r.imag_ratio_lower <= r.imag_ratio);
        }
        let csv = ring_scan_csv(&rows);
        assert!(csv.starts_with(RING_SCAN_HEADER));
        assert_eq!(csv.lines().count(), 6);
    }
}
