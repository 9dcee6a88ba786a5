//! Dense univariate polynomials over a generic coefficient ring.
//!
//! Coefficients are stored lowest degree first and kept trimmed, so the last
//! stored coefficient (when any) is nonzero and the zero polynomial is the
//! empty vector.

use crate::scalar::{from_usize, Field, Ring};
use crate::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly { coeffs: vec![T::zero(), T::one()] }
    }

    /// `c * x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// `x - r`
    pub fn linear_root(r: T) -> Self {
        Poly::new(vec![-r, T::one()])
    }

    /// Falling factorial `(x)_k = x (x-1) ... (x-k+1)`; `(x)_0 = 1`.
    pub fn falling_factorial(k: usize) -> Self {
        let mut acc = Poly::one();
        for j in 0..k {
            acc = &acc * &Poly::linear_root(from_usize(j));
        }
        acc
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * from_usize::<T>(i))
                .collect(),
        )
    }

    /// The `k`-th derivative, computed in one pass via falling-factorial multipliers.
    pub fn nth_derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(k)
                .map(|(i, c)| {
                    let mult = (i + 1 - k..=i).fold(T::one(), |acc, j| acc * from_usize::<T>(j));
                    c.clone() * mult
                })
                .collect(),
        )
    }

    /// `p(x + s)` by repeated synthetic division (exact in any ring).
    pub fn taylor_shift(&self, s: &T) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = c[j + 1].clone() * s;
                c[j] = c[j].clone() + t;
            }
        }
        Poly::new(c)
    }

    /// `p(x^2)`.
    pub fn compose_square(&self) -> Self {
        let mut c = vec![T::zero(); self.coeffs.len() * 2];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[2 * i] = a.clone();
        }
        Poly::new(c)
    }

    /// Divide by the monic linear factor `x - r`, returning quotient and remainder.
    pub fn div_linear(&self, r: &T) -> (Self, T) {
        if self.coeffs.is_empty() {
            return (Poly::zero(), T::zero());
        }
        let mut q = vec![T::zero(); self.coeffs.len() - 1];
        let mut carry = T::zero();
        for i in (0..self.coeffs.len()).rev() {
            let v = self.coeffs[i].clone() + carry.clone() * r;
            if i == 0 {
                return (Poly::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Coefficients in the falling-factorial basis: `p = sum_k s[k] (x)_k`.
    pub fn to_falling_factorial(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut rest = self.clone();
        let mut node = 0usize;
        while !rest.is_zero() {
            let (q, r) = rest.div_linear(&from_usize(node));
            out.push(r);
            rest = q;
            node += 1;
        }
        out
    }

    pub fn from_falling_factorial(s: &[T]) -> Self {
        let mut acc = Poly::zero();
        for (k, sk) in s.iter().enumerate().rev() {
            acc = &(&acc * &Poly::linear_root(from_usize(k))) + &Poly::constant(sk.clone());
        }
        acc
    }
}

impl<T: Field> Poly<T> {
    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![T::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() / &lead;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[i + j] = r[i + j].clone() - c.clone() * dj;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = T::one() / l;
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<T: Ring> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b;
            }
        }
        Poly::new(c)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Self) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl Poly<BigInt> {
    pub fn from_i64s(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn to_f64(&self) -> Poly<f64> {
        use num_traits::ToPrimitive;
        self.map(|c| c.to_f64().unwrap_or(f64::NAN))
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Poly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Sign of `p(num/den)` for `den > 0`, computed exactly by homogeneous Horner.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> Sign {
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &dpow;
            dpow *= den;
        }
        acc.sign()
    }

    /// Remainder of `self` by `d` scaled by a positive constant, so that its sign
    /// pattern equals that of the true Euclidean remainder.
    pub fn sign_preserving_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let lead_abs = lead.abs();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return self.clone();
        }
        // Each step multiplies the running remainder by |lead| (positive) and
        // subtracts sign(lead) * r_top * x^i * d.
        for i in (0..r.len() - dd).rev() {
            let top = r[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            for c in r.iter_mut() {
                *c *= &lead_abs;
            }
            let factor = if lead.is_negative() { -top } else { top };
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[i + j] -= &factor * dj;
            }
        }
        r.truncate(dd);
        Poly::new(r).primitive_part()
    }
}

impl Poly<BigRational> {
    /// Multiply through by the lcm of the denominators and return the primitive
    /// integer polynomial with the same roots and leading sign.
    pub fn clear_denominators(&self) -> Poly<BigInt> {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<Poly<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

/// Exact JSON form: coefficients as decimal strings, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub degree: usize,
    pub coeffs: Vec<String>,
}

impl From<&Poly<BigInt>> for PolyJson {
    fn from(p: &Poly<BigInt>) -> Self {
        let coeffs: Vec<String> = if p.is_zero() {
            vec!["0".to_string()]
        } else {
            p.coeffs.iter().map(|c| c.to_string()).collect()
        };
        PolyJson { degree: p.degree().unwrap_or(0), coeffs }
    }
}

impl TryFrom<&PolyJson> for Poly<BigInt> {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let p = Poly::new(coeffs);
        if p.degree().unwrap_or(0) != j.degree {
            return Err(Error::Parse(format!(
                "degree field {} does not match coefficients",
                j.degree
            )));
        }
        Ok(p)
    }
}
