// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{gram_det2, IntMatrix};
use crate::scalar::{gcd_slice, is_sign_canonical, sign_canonical, Scalar};

/// A primitive, sign-canonical linear form `aX0 + bX1 + cX2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm<T> {
    a: T,
    b: T,
    c: T,
}

impl<T: Scalar> LinearForm<T> {
    /// Strict constructor: the triple must already be primitive with its
    /// first nonzero coordinate positive.
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        let v = [a, b, c];
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::ZeroLinearForm);
        }
        if !gcd_slice(&v).is_one() || !is_sign_canonical(&v) {
            return Err(Error::NonCanonicalForm(format!("{}, {}, {}", v[0], v[1], v[2])));
        }
        let [a, b, c] = v;
        Ok(Self { a, b, c })
    }

    /// Divide out the content and fix the sign.
    pub fn from_raw(a: T, b: T, c: T) -> Result<Self> {
        let mut v = [a, b, c];
        let g = gcd_slice(&v);
        if g.is_zero() {
            return Err(Error::ZeroLinearForm);
        }
        for x in v.iter_mut() {
            *x = x.clone() / g.clone();
        }
        sign_canonical(&mut v);
        let [a, b, c] = v;
        Ok(Self { a, b, c })
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::from_raw(T::from_i64_exact(a), T::from_i64_exact(b), T::from_i64_exact(c))
    }

    pub fn a(&self) -> &T {
        &self.a
    }
    pub fn b(&self) -> &T {
        &self.b
    }
    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn coeffs(&self) -> [T; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// `max(|a|, |b|, |c|)`
    pub fn m(&self) -> T {
        self.a.abs().max(self.b.abs()).max(self.c.abs())
    }

    /// `a^2 + b^2 + c^2`, the squared covolume of the rank-1 lattice.
    pub fn norm2(&self) -> T {
        self.a.clone() * self.a.clone() + self.b.clone() * self.b.clone() + self.c.clone() * self.c.clone()
    }

    pub fn eval(&self, v: &[T; 3]) -> T {
        self.a.clone() * v[0].clone() + self.b.clone() * v[1].clone() + self.c.clone() * v[2].clone()
    }

    /// Rows `X0*l, X1*l, X2*l` in the degree-2 monomial basis.
    pub fn product_basis(&self) -> IntMatrix<T> {
        let (a, b, c) = (self.a.clone(), self.b.clone(), self.c.clone());
        let z = T::zero;
        IntMatrix::from_rows(&[
            [a.clone(), b.clone(), c.clone(), z(), z(), z()],
            [z(), a.clone(), z(), b.clone(), c.clone(), z()],
            [z(), z(), a, z(), b, c],
        ])
        .expect("3x6 shape")
    }

    pub fn convert<U: Scalar>(&self) -> LinearForm<U> {
        let f = |x: &T| U::from_bigint(&x.to_bigint()).expect("coefficient fits target scalar");
        LinearForm {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
        }
    }
}

impl<T: Scalar> fmt::Debug for LinearForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl<T: Scalar> fmt::Display for LinearForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

/// Closed form for the squared covolume of `S(1)*l`.
pub fn sl_polynomial<T: Scalar>(a: &T, b: &T, c: &T) -> T {
    let a2 = a.clone() * a.clone();
    let b2 = b.clone() * b.clone();
    let c2 = c.clone() * c.clone();
    let two = T::from_i64_exact(2);
    let five = T::from_i64_exact(5);
    let a4 = a2.clone() * a2.clone();
    let b4 = b2.clone() * b2.clone();
    let c4 = c2.clone() * c2.clone();
    a4.clone() * a2.clone()
        + two.clone() * b2.clone() * a4.clone()
        + two.clone() * c2.clone() * a4
        + two.clone() * b4.clone() * a2.clone()
        + five * c2.clone() * b2.clone() * a2.clone()
        + two.clone() * c4.clone() * a2
        + b4.clone() * b2.clone()
        + two.clone() * c2.clone() * b4
        + two * c4.clone() * b2
        + c4 * c2
}

/// A full-rank integer lattice given by basis rows, with cached squared covolume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice<T: Scalar> {
    basis: IntMatrix<T>,
    covol2: T,
}

impl<T: Scalar> IntLattice<T> {
    pub fn new(basis: IntMatrix<T>) -> Result<Self> {
        let covol2 = gram_det2(&basis)?;
        Ok(Self { basis, covol2 })
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix<T> {
        &self.basis
    }

    pub fn covol2(&self) -> &T {
        &self.covol2
    }
}

pub fn product_lattice<T: Scalar>(l: &LinearForm<T>) -> IntLattice<T> {
    IntLattice::new(l.product_basis()).expect("X_i * l are independent")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert!(LinearForm::<i64>::new(0, 0, 0).is_err());
        assert!(LinearForm::<i64>::new(2, 4, 0).is_err());
        assert!(LinearForm::<i64>::new(-1, 1, 0).is_err());
        let l = LinearForm::<i64>::from_raw(0, -4, 6).unwrap();
        assert_eq!(l.coeffs(), [0, 2, -3]);
        assert_eq!(l.m(), 3);
    }

    #[test]
    fn product_covolumes() {
        for (abc, want) in [((1, 0, 0), 1i128), ((1, 1, 1), 20), ((1, 2, 3), 2130)] {
            let l = LinearForm::<i128>::from_i64(abc.0, abc.1, abc.2).unwrap();
            let lat = product_lattice(&l);
            assert_eq!(*lat.covol2(), want);
            assert_eq!(sl_polynomial(l.a(), l.b(), l.c()), want);
        }
        let n = 14i128;
        assert!(2 * n * n * n <= 3 * 2130 && 2130 <= n * n * n);
        assert_eq!(sl_polynomial(&1i64, &1, &0), 6);
    }
}
