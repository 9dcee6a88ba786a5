//! Discriminant certificates. A negative value proves a nonreal root; a
//! nonnegative one proves nothing.

use crate::census::{binomial, Census};
use crate::chromatic::top_coefficient_magnitudes;
use crate::scalar::{Field, Ring};
use crate::{Error, Result};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantReport<T> {
    pub value: T,
    pub sign: i8,
}

impl<T: Ring + PartialOrd> DiscriminantReport<T> {
    pub fn new(value: T) -> Self {
        let zero = T::zero();
        let sign = if value < zero {
            -1
        } else if value > zero {
            1
        } else {
            0
        };
        DiscriminantReport { value, sign }
    }

    /// True when the value certifies a nonreal root.
    pub fn certifies_nonreal(&self) -> bool {
        self.sign < 0
    }
}

fn k<T: Ring>(v: i64) -> T {
    T::from_i64(v).expect("small constant")
}

/// Discriminant of `(n(n-1)/2) x^2 - (n-1) m x + (C(m,2) - t)`, i.e.
/// `(n-1)^2 m^2 - n(n-1)(m(m-1) - 2t)`.
pub fn quadratic_discriminant<T: Ring + PartialOrd>(n: &T, m: &T, t: &T) -> DiscriminantReport<T> {
    let n1 = n.clone() - T::one();
    let lhs = n1.clone() * &n1 * m * m;
    let rhs = n.clone() * &n1 * (m.clone() * (m.clone() - T::one()) - k::<T>(2) * t);
    DiscriminantReport::new(lhs - rhs)
}

/// Integer form for a graph of order `n` with `m` edges and `t` triangles.
pub fn quadratic_disc_test(n: u64, m: u64, t: u64) -> Result<DiscriminantReport<BigInt>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("quadratic test needs n >= 2, got {n}")));
    }
    Ok(quadratic_discriminant(&BigInt::from(n), &BigInt::from(m), &BigInt::from(t)))
}

/// Discriminant of `a x^4 + b x^3 + c x^2 + d x + e`.
pub fn quartic_discriminant<T: Ring + PartialOrd>(a: &T, b: &T, c: &T, d: &T, e: &T) -> Result<DiscriminantReport<T>> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("quartic discriminant needs a nonzero leading coefficient".into()));
    }
    let m = |f: i64, xs: &[&T]| xs.iter().fold(k::<T>(f), |acc, x| acc * *x);
    let terms = [
        m(256, &[a, a, a, e, e, e]),
        m(-192, &[a, a, b, d, e, e]),
        m(-128, &[a, a, c, c, e, e]),
        m(144, &[a, a, c, d, d, e]),
        m(-27, &[a, a, d, d, d, d]),
        m(144, &[a, b, b, c, e, e]),
        m(-6, &[a, b, b, d, d, e]),
        m(-80, &[a, b, c, c, d, e]),
        m(18, &[a, b, c, d, d, d]),
        m(16, &[a, c, c, c, c, e]),
        m(-4, &[a, c, c, c, d, d]),
        m(-27, &[b, b, b, b, e, e]),
        m(18, &[b, b, b, c, d, e]),
        m(-4, &[b, b, b, d, d, d]),
        m(-4, &[b, b, c, c, c, e]),
        m(1, &[b, b, c, c, d, d]),
    ];
    Ok(DiscriminantReport::new(terms.into_iter().fold(T::zero(), |s, t| s + t)))
}

/// The quartic `(n-4)`-th derivative of the chromatic polynomial divided by
/// `(n-4)!`, built from census counts; coefficients highest degree first.
/// The coefficient of `x^(4-i)` is `(-1)^i c_i C(n-i, 4-i)`.
pub fn quartic_from_counts<T: Field>(counts: &Census<T>, n: usize) -> Result<[T; 5]> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("quartic needs order >= 4, got {n}")));
    }
    let c = top_coefficient_magnitudes(counts);
    let mut out: [T; 5] = std::array::from_fn(|_| T::zero());
    for (i, ci) in c.into_iter().enumerate() {
        let v = ci * binomial::<T>(n - i, 4 - i);
        out[i] = if i % 2 == 1 { -v } else { v };
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;
    use crate::chromatic::{chromatic_polynomial, derivative};
    use crate::graph::{complete, complete_bipartite};
    use crate::roots::{count_real_roots, find_roots, AllReal};
    use crate::{IntPolynomial, Poly};
    use num_rational::BigRational;

    fn q(a: i64, b: i64, c: i64, d: i64, e: i64) -> DiscriminantReport<BigInt> {
        let v = |x: i64| BigInt::from(x);
        quartic_discriminant(&v(a), &v(b), &v(c), &v(d), &v(e)).unwrap()
    }

    #[test]
    fn quadratic_examples() {
        let k3 = quadratic_disc_test(3, 3, 1).unwrap();
        assert_eq!(k3.value, BigInt::from(12));
        let k23 = quadratic_disc_test(5, 6, 0).unwrap();
        assert_eq!((k23.value.clone(), k23.sign), (BigInt::from(-24), -1));
        assert!(k23.certifies_nonreal());
        assert_eq!(quadratic_disc_test(4, 4, 0).unwrap().sign, 0);
        assert!(quadratic_disc_test(1, 0, 0).is_err());
    }

    #[test]
    fn quartic_examples() {
        assert_eq!(q(1, 0, 0, 0, -1).value, BigInt::from(-256));
        assert_eq!(q(1, 0, -5, 0, 4).value, BigInt::from(5184));
        assert_eq!(q(1, 0, 0, 0, 0).sign, 0);
        let z = BigInt::from(0);
        assert!(quartic_discriminant(&z, &z, &z, &z, &z).is_err());
    }

    /// Independent check: the discriminant equals `a^6 prod_{i<j} (r_i - r_j)^2`.
    #[test]
    fn quartic_matches_root_product() {
        for roots in [[1i64, 2, 3, 4], [-3, 0, 0, 5], [2, -1, 7, -6]] {
            let p: IntPolynomial = roots.iter().fold(Poly::one(), |acc, &r| &acc * &Poly::linear_root(BigInt::from(r)));
            let c = p.coeffs();
            let d = quartic_discriminant(&c[4], &c[3], &c[2], &c[1], &c[0]).unwrap();
            let mut want = 1i64;
            for i in 0..4 {
                for j in i + 1..4 {
                    want *= (roots[i] - roots[j]).pow(2);
                }
            }
            assert_eq!(d.value, BigInt::from(want));
        }
    }

    fn quartic_of(g: &crate::Graph) -> [BigRational; 5] {
        let c = census(g).map(|&v| BigRational::from_integer(BigInt::from(v)));
        quartic_from_counts(&c, g.order()).unwrap()
    }

    #[test]
    fn quartic_matches_derivative() {
        for g in [complete(5).unwrap(), complete_bipartite(2, 3).unwrap(), complete_bipartite(3, 3).unwrap()] {
            let n = g.order();
            let d = derivative(&chromatic_polynomial(&g).unwrap(), n - 4);
            let fact: BigInt = (1..=n - 4).map(BigInt::from).product();
            let got = quartic_of(&g);
            for i in 0..5 {
                assert_eq!(got[i], BigRational::new(d.coeff(4 - i), fact.clone()));
            }
        }
    }

    #[test]
    fn k5_quartic_is_all_real() {
        let c = quartic_of(&complete(5).unwrap());
        let d = quartic_discriminant(&c[0], &c[1], &c[2], &c[3], &c[4]).unwrap();
        assert_eq!(d.sign, 1);
    }

    #[test]
    fn k23_quartic_sign_is_consistent() {
        let g = complete_bipartite(2, 3).unwrap();
        let c = quartic_of(&g);
        let d = quartic_discriminant(&c[0], &c[1], &c[2], &c[3], &c[4]).unwrap();
        let exact = count_real_roots(&chromatic_polynomial(&g).unwrap()).unwrap();
        assert!(!exact.all_real());
        if d.certifies_nonreal() {
            assert!(!exact.all_real());
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(300))]
            #[test]
            fn negative_quartic_means_two_nonreal(c in prop::collection::vec(-9i64..=9, 5)) {
                prop_assume!(c[4] != 0);
                let v: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
                let d = quartic_discriminant(&v[4], &v[3], &v[2], &v[1], &v[0]).unwrap();
                prop_assume!(d.sign < 0);
                let r = find_roots(&Poly::from_i64s(&c)).unwrap();
                prop_assert_eq!(r.nonreal().count(), 2);
                prop_assert_eq!(r.all_real, AllReal::No);
            }

            #[test]
            fn quadratic_sign_matches_float(n in 2u64..40, m in 0u64..200, t in 0u64..300) {
                let d = quadratic_disc_test(n, m, t).unwrap();
                let (n, m, t) = (n as f64, m as f64, t as f64);
                let f = (n - 1.0).powi(2) * m * m - 2.0 * n * (n - 1.0) * (m * (m - 1.0) / 2.0 - t);
                prop_assert_eq!(d.sign as f64, f.signum() * (f != 0.0) as i32 as f64);
            }
        }
    }
}
