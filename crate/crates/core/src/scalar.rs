//! Scalar trait bounds shared by the polynomial and root-finding code.
//!
//! The exact code paths run over [`num_bigint::BigInt`] and
//! [`num_rational::BigRational`]; the numeric paths run over `f32`/`f64`.

use num_traits::{FromPrimitive, One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Commutative ring with a unit, as far as dense polynomial arithmetic cares.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + FromPrimitive
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + FromPrimitive
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Sub<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
{
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + std::ops::Div<Output = Self> + for<'a> std::ops::Div<&'a Self, Output = Self> {}

impl<T> Field for T where T: Ring + std::ops::Div<Output = T> + for<'a> std::ops::Div<&'a T, Output = T> {}

/// Lift a small unsigned integer into any ring.
pub(crate) fn from_usize<T: Ring>(k: usize) -> T {
    T::from_usize(k).expect("small integer representable in scalar type")
}
