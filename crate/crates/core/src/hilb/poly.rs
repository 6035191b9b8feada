// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exponent triples of degree `e`, ordered by the exponent of `X0`
/// descending, then that of `X1` descending.
pub fn monomials(e: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(((e + 1) * (e + 2) / 2) as usize);
    for i in (0..=e).rev() {
        for j in (0..=e - i).rev() {
            out.push([i, j, e - i - j]);
        }
    }
    out
}

/// Position of a monomial in [`monomials`] of its degree.
pub fn monomial_index(m: [u32; 3]) -> usize {
    let e = m[0] + m[1] + m[2];
    let before: u32 = (m[0] + 1..=e).map(|i| e - i + 1).sum();
    (before + (e - m[0] - m[1])) as usize
}

pub fn dim_s(e: u32) -> usize {
    ((e + 1) * (e + 2) / 2) as usize
}

/// Coefficient vector of `p * x^m`, where `p` is homogeneous of degree `dp`.
pub fn shift<T: Scalar>(p: &[T], dp: u32, m: [u32; 3]) -> Vec<T> {
    let dm = m[0] + m[1] + m[2];
    let mut out = vec![T::zero(); dim_s(dp + dm)];
    for (c, mono) in p.iter().zip(monomials(dp)) {
        if c.is_zero() {
            continue;
        }
        let idx = monomial_index([mono[0] + m[0], mono[1] + m[1], mono[2] + m[2]]);
        out[idx] = c.clone();
    }
    out
}

fn pow<T: Scalar>(x: &T, k: u32) -> T {
    (0..k).fold(T::one(), |acc, _| acc * x.clone())
}

/// Evaluate a homogeneous polynomial of degree `d` at an integer point.
pub fn eval<T: Scalar>(p: &[T], d: u32, v: &[T; 3]) -> T {
    p.iter().zip(monomials(d)).fold(T::zero(), |acc, (c, m)| {
        acc + c.clone() * pow(&v[0], m[0]) * pow(&v[1], m[1]) * pow(&v[2], m[2])
    })
}

/// A nonzero ternary quadratic form on
/// `(X0^2, X0X1, X0X2, X1^2, X1X2, X2^2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm<T> {
    coeffs: [T; 6],
}

impl<T: Scalar> QuadraticForm<T> {
    pub fn new(coeffs: [T; 6]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::Invalid("quadratic form must be nonzero".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64(c: [i64; 6]) -> Result<Self> {
        Self::new(c.map(T::from_i64_exact))
    }

    pub fn coeffs(&self) -> &[T; 6] {
        &self.coeffs
    }

    pub fn eval(&self, v: &[T; 3]) -> T {
        eval(&self.coeffs, 2, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_order() {
        assert_eq!(
            monomials(2),
            vec![[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]]
        );
        for e in 0..6 {
            for (i, m) in monomials(e).into_iter().enumerate() {
                assert_eq!(monomial_index(m), i);
            }
            assert_eq!(monomials(e).len(), dim_s(e));
        }
    }

    #[test]
    fn shifting_matches_product_basis() {
        let l = [2i64, -1, 3];
        assert_eq!(shift(&l, 1, [0, 1, 0]), vec![0, 2, 0, -1, 3, 0]);
        assert_eq!(shift(&l, 1, [0, 0, 1]), vec![0, 0, 2, 0, -1, 3]);
    }

    #[test]
    fn evaluation() {
        let q = QuadraticForm::<i64>::from_i64([1, 0, 0, -2, 0, 0]).unwrap();
        assert_eq!(q.eval(&[3, 2, 7]), 1);
        assert!(QuadraticForm::<i64>::from_i64([0; 6]).is_err());
    }
}
