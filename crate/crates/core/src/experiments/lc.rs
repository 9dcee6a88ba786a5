//! Limit discriminants at zero deviation: the quadratic expression in `p`
//! and the leading coefficient `lc(p)` of the quartic discriminant in `n`.

use crate::census::expected_counts;
use crate::roots::sturm::isolate_real_roots;
use crate::roots::{quartic_discriminant, quartic_from_counts, IsolatedRoot};
use crate::scalar::Field;
use crate::{Error, Poly, RatPolynomial, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// Normalised limit of the quadratic discriminant:
/// `p^2 ((1 + eT) p / 3 - (1 + eM)^2 / 4)`.
pub fn quad_disc_expectation<T: Field>(p: &T, e_m: &T, e_t: &T) -> T {
    let k = |v: i64| T::from_i64(v).expect("small constant");
    let one_m = T::one() + e_m;
    let one_t = T::one() + e_t;
    p.clone() * p * ((one_t * p) / k(3) - (one_m.clone() * &one_m) / k(4))
}

/// `(degree, numerator, denominator)` for the ten terms of `lc(p)`.
pub const LC_TERMS: [(usize, i64, i64); 10] = [
    (21, -1, 93312),
    (20, -1, 186624),
    (19, 1, 124416),
    (18, -227, 80621568),
    (17, -1, 1119744),
    (16, 5, 2985984),
    (15, -5, 2985984),
    (14, 5, 5308416),
    (13, -1, 3538944),
    (12, 1, 28311552),
];

pub fn quartic_lc_polynomial() -> RatPolynomial {
    let mut c = vec![BigRational::zero(); 22];
    for (deg, num, den) in LC_TERMS {
        c[deg] = BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    Poly::new(c)
}

/// `lc(p)`, exact in any field.
pub fn quartic_lc<T: Field>(p: &T) -> T {
    LC_TERMS.iter().rev().fold(T::zero(), |acc, &(deg, num, den)| {
        let mut pw = T::one();
        for _ in 0..deg {
            pw = pw * p;
        }
        acc + pw * T::from_i64(num).unwrap() / T::from_i64(den).unwrap()
    })
}

/// Largest root of `lc` in `(0, 1)`, isolated exactly and bisected to width
/// below `tol`.
pub fn quartic_lc_root(tol: &BigRational) -> Result<IsolatedRoot> {
    // lc(p) = p^12 g(p); only g has roots in (0, 1).
    let lc = quartic_lc_polynomial();
    let g = Poly::new(lc.coeffs()[12..].to_vec()).clear_denominators();
    let zero = BigRational::zero();
    let one = BigRational::one();
    isolate_real_roots(&g, tol)?
        .into_iter().rfind(|r| r.lo >= zero && r.hi <= one)
        .ok_or_else(|| Error::Computation("lc has no root in (0, 1)".into()))
}

/// Orders used by [`lc_numeric_oracle`].
pub const ORACLE_ORDERS: [usize; 3] = [200, 400, 800];

#[derive(Clone, Debug, Serialize)]
pub struct LcFit {
    pub p: f64,
    /// `(n, Disc / n^30)` with expected counts substituted exactly.
    pub samples: Vec<(usize, f64)>,
    /// Richardson extrapolation of the samples to `n -> infinity`.
    pub fitted: f64,
    /// Difference between the two first-order extrapolants, a stability gauge.
    pub spread: f64,
}

/// `Disc / n^30` of the census quartic with exact expected counts at order `n`.
pub fn scaled_expected_discriminant(n: usize, p: &BigRational) -> Result<BigRational> {
    let counts = expected_counts::<BigRational>(n, p);
    let [a, b, c, d, e] = quartic_from_counts(&counts, n)?;
    let disc = quartic_discriminant(&a, &b, &c, &d, &e)?.value;
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(n), 30));
    Ok(disc / scale)
}

/// Independent estimate of `lc(p)`: evaluate `Disc / n^30` exactly at
/// `n = 200, 400, 800` and remove the `1/n` and `1/n^2` terms.
pub fn lc_numeric_oracle(p: f64) -> Result<LcFit> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidArgument(format!("oracle needs p in (0,1), got {p}")));
    }
    let pr = BigRational::from_float(p).expect("finite");
    let mut r = Vec::new();
    for n in ORACLE_ORDERS {
        r.push(scaled_expected_discriminant(n, &pr)?);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let e1 = &two * &r[1] - &r[0];
    let e2 = &two * &r[2] - &r[1];
    let fitted = (BigRational::from_integer(BigInt::from(4)) * &e2 - &e1) / BigRational::from_integer(BigInt::from(3));
    let f = |x: &BigRational| x.to_f64().unwrap_or(f64::NAN);
    let fit = LcFit {
        p,
        samples: ORACLE_ORDERS.iter().zip(&r).map(|(&n, v)| (n, f(v))).collect(),
        fitted: f(&fitted),
        spread: f(&(e2 - e1)),
    };
    if !fit.fitted.is_finite() {
        return Err(Error::Computation(format!("lc fit at p = {p} is not finite")));
    }
    Ok(fit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    // Leading coefficient of the census quartic discriminant, frozen from an
    // exact interpolation in n at 70 rational values of p.
    fn interpolated_lc(p: f64) -> f64 {
        let terms = [
            (12, 1.0 / 28311552.0),
            (13, -1.0 / 3538944.0),
            (14, 5.0 / 5308416.0),
            (15, -5.0 / 2985984.0),
            (16, 5.0 / 2985984.0),
            (17, -1.0 / 1119744.0),
            (18, 1.0 / 5038848.0),
        ];
        terms.iter().map(|&(k, c)| c * p.powi(k)).sum()
    }

    #[test]
    fn quadratic_limit_examples() {
        assert!(quad_disc_expectation(&rat(3, 4), &BigRational::zero(), &BigRational::zero()).is_zero());
        assert_eq!(quad_disc_expectation(&rat(1, 2), &BigRational::zero(), &BigRational::zero()), rat(-1, 48));
        assert!(quad_disc_expectation(&0.9, &0.0, &0.0) > 0.0);
    }

    #[test]
    fn lc_root_location() {
        let r = quartic_lc_root(&rat(1, 1_000_000_000)).unwrap();
        assert!((r.to_f64() - 0.31564).abs() < 5e-5, "{}", r.to_f64());
        assert!(quartic_lc(&0.2) > 0.0);
        assert!(quartic_lc(&0.5) < 0.0);
    }

    #[test]
    fn exact_and_float_lc_agree() {
        let exact = quartic_lc(&rat(9, 10)).to_f64().unwrap();
        assert!((exact - quartic_lc(&0.9)).abs() <= 1e-12 * exact.abs());
    }

    #[test]
    fn oracle_tracks_interpolated_lc() {
        let fit = lc_numeric_oracle(0.5).unwrap();
        let want = interpolated_lc(0.5);
        assert!((fit.fitted - want).abs() < 0.01 * want, "{} vs {want}", fit.fitted);
        assert!(lc_numeric_oracle(1.0).is_err());
    }

    #[test]
    fn interpolated_lc_has_a_double_root_at_three_quarters() {
        assert!(interpolated_lc(0.75).abs() < 1e-30);
        assert!(interpolated_lc(0.7) > 0.0 && interpolated_lc(0.8) > 0.0);
    }
}
