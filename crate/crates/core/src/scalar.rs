// SPDX-License-Identifier: Apache-2.0

//! Scalar traits. The exact core is generic over an integer ring element
//! (`i64`, `i128` or `BigInt`); reporting code is generic over a float.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{CheckedMul, CheckedSub, Float, FloatConst, FromPrimitive, Signed, ToPrimitive};

/// An exact integer type usable by the lattice code.
///
/// Fixed-width implementors rely on overflow checks being enabled (they are,
/// in every profile of this workspace) so that overflow panics instead of
/// silently producing a wrong count.
pub trait Scalar:
    Integer
    + Signed
    + Roots
    + Clone
    + Debug
    + Display
    + Hash
    + Send
    + Sync
    + FromPrimitive
    + ToPrimitive
    + CheckedMul
    + CheckedSub
    + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("i64 fits every scalar")
    }

    fn to_bigint(&self) -> BigInt;

    fn from_bigint(v: &BigInt) -> Option<Self>;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
}

impl Scalar for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
}

impl Scalar for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

/// Floating point type used at reporting boundaries.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync {}

impl<F> Real for F where F: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync {}

pub(crate) fn gcd_slice<T: Scalar>(xs: &[T]) -> T {
    xs.iter().fold(T::zero(), |acc, x| acc.gcd(x))
}

/// Exact perfect-square test; negative values are never squares.
pub fn is_perfect_square<T: Scalar>(v: &T) -> bool {
    if v.is_negative() {
        return false;
    }
    let r = v.sqrt();
    r.clone() * r == *v
}

/// Sign-normalise so that the first nonzero entry is positive.
pub(crate) fn sign_canonical<T: Scalar>(v: &mut [T]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

pub(crate) fn is_sign_canonical<T: Scalar>(v: &[T]) -> bool {
    v.iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_positive())
        .unwrap_or(false)
}
